// Dilation f_t(x) = f(x/t) by trigonometric (band-limited) resampling,
// applied axis by axis.
#pragma once

#include <stdexcept>

#include "fracfield/field.hpp"
#include "fracfield/spectral.hpp"

namespace fracfield {

namespace detail {

// N x N evaluation matrix of the trigonometric interpolant at targets x_k/t.
// Nyquist mode dropped (fields of interest carry no energy there).
inline std::vector<cplx> resample_matrix(const GridSpec& g, double t) {
    const int N = g.N;
    std::vector<cplx> E(static_cast<std::size_t>(N) * N);
    for (int k = 0; k < N; ++k) {
        const double x = g.coord(k) / t;
        for (int m = 0; m < N; ++m) {
            if (m == N / 2) {
                E[static_cast<std::size_t>(k) * N + m] = 0.0;
                continue;
            }
            const double xi = wavenumber(m, N, g.L);
            E[static_cast<std::size_t>(k) * N + m] = std::polar(1.0 / N, xi * x);
        }
    }
    return E;
}

}  // namespace detail

inline ScalarField dilate_field(const ScalarField& f, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("dilate_field: t must be positive");
    const double new_support = f.support_radius * t;
    if (new_support > f.grid.L / 2.0 + 1e-12)
        throw std::invalid_argument("dilate_field: dilated support exceeds L/2 padding");

    const GridSpec& g = f.grid;
    const int N = g.N;
    // spectrally constructed inputs carry small tails outside their nominal
    // support; only re-zero when the input support was exact
    bool exact_support = true;
    for_each_index(g, [&](const Index& k) {
        if (norm2(g.point(k)) > f.support_radius && f.values[g.flatten(k)] != 0.0)
            exact_support = false;
    });
    auto data = to_complex(f);
    const auto E = detail::resample_matrix(g, t);
    std::vector<std::size_t> strides(g.n);
    {
        std::size_t s = 1;
        for (int a = g.n - 1; a >= 0; --a) {
            strides[a] = s;
            s *= static_cast<std::size_t>(N);
        }
    }
    std::vector<cplx> line(static_cast<std::size_t>(N)), out_line(static_cast<std::size_t>(N));
    const std::size_t total = g.size();
    const auto tw = detail::fft_twiddles(N);
    for (int axis = 0; axis < g.n; ++axis) {
        const std::size_t st = strides[axis];
        const std::size_t nlines = total / N;
        for (std::size_t li = 0; li < nlines; ++li) {
            std::size_t rem = li, base = 0;
            for (int a = g.n - 1; a >= 0; --a) {
                if (a == axis) continue;
                base += (rem % N) * strides[a];
                rem /= N;
            }
            for (int i = 0; i < N; ++i) line[static_cast<std::size_t>(i)] = data[base + st * i];
            detail::fft_line(line.data(), N, tw, false);
            for (int k = 0; k < N; ++k) {
                cplx acc = 0.0;
                for (int m = 0; m < N; ++m) acc += E[static_cast<std::size_t>(k) * N + m] * line[static_cast<std::size_t>(m)];
                out_line[static_cast<std::size_t>(k)] = acc;
            }
            for (int i = 0; i < N; ++i) data[base + st * i] = out_line[static_cast<std::size_t>(i)];
        }
    }
    ScalarField out = to_real(g, data, new_support);
    if (exact_support) {
        for_each_index(g, [&](const Index& k) {
            if (norm2(g.point(k)) > new_support) out.values[g.flatten(k)] = 0.0;
        });
    }
    return out;
}

inline VectorField dilate_field(const VectorField& f, double t) {
    VectorField out(f.grid);
    for (int c = 0; c < f.grid.n; ++c) out.comps[c] = dilate_field(f.comps[c], t);
    out.set_support_radius(f.support_radius() * t);
    return out;
}

}  // namespace fracfield
