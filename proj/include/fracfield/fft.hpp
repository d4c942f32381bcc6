// Iterative radix-2 complex FFT and n-dimensional transforms.
// Power-of-two sizes only; deterministic (per-line serial butterflies,
// parallelism only across independent lines).
#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fracfield/grid.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracfield {

using cplx = std::complex<double>;

namespace detail {

// twiddles[k] = exp(-2*pi*i*k/len) for k < len/2
inline std::vector<cplx> fft_twiddles(int len) {
    std::vector<cplx> w(static_cast<std::size_t>(len / 2));
    const double step = -2.0 * std::numbers::pi / len;
    for (int k = 0; k < len / 2; ++k) w[k] = std::polar(1.0, step * k);
    return w;
}

inline void fft_line(cplx* a, int len, const std::vector<cplx>& tw, bool inverse) {
    // bit reversal
    for (int i = 1, j = 0; i < len; ++i) {
        int bit = len >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int m = 2; m <= len; m <<= 1) {
        const int half = m / 2;
        const int tstep = len / m;
        for (int s = 0; s < len; s += m) {
            for (int k = 0; k < half; ++k) {
                cplx w = tw[static_cast<std::size_t>(k) * tstep];
                if (inverse) w = std::conj(w);
                const cplx u = a[s + k];
                const cplx t = w * a[s + k + half];
                a[s + k] = u + t;
                a[s + k + half] = u - t;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / len;
        for (int i = 0; i < len; ++i) a[i] *= inv;
    }
}

}  // namespace detail

// In-place n-dimensional FFT over a row-major cube of side N (dim axes).
inline void fft_nd(std::vector<cplx>& data, int dim, int N, bool inverse) {
    if (!is_power_of_two(N)) throw std::invalid_argument("fft_nd: size must be a power of two");
    const auto tw = detail::fft_twiddles(N);
    std::size_t stride = 1;
    std::vector<std::size_t> strides(dim);
    for (int a = dim - 1; a >= 0; --a) {
        strides[a] = stride;
        stride *= static_cast<std::size_t>(N);
    }
    const std::size_t total = stride;
    for (int axis = 0; axis < dim; ++axis) {
        const std::size_t st = strides[axis];
        const std::size_t nlines = total / N;
#ifdef _OPENMP
#pragma omp parallel
#endif
        {
            std::vector<cplx> line(static_cast<std::size_t>(N));
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (long long li = 0; li < static_cast<long long>(nlines); ++li) {
                // line index -> base offset: positions with axis coordinate 0
                std::size_t rem = static_cast<std::size_t>(li);
                std::size_t base = 0;
                for (int a = dim - 1; a >= 0; --a) {
                    if (a == axis) continue;
                    base += (rem % N) * strides[a];
                    rem /= N;
                }
                for (int i = 0; i < N; ++i) line[static_cast<std::size_t>(i)] = data[base + st * i];
                detail::fft_line(line.data(), N, tw, inverse);
                for (int i = 0; i < N; ++i) data[base + st * i] = line[static_cast<std::size_t>(i)];
            }
        }
    }
}

}  // namespace fracfield
