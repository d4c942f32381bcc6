// Fourier-side machinery: wavenumbers, multipliers, spectral derivatives,
// zero-padded embeddings for convolution-type operators.
//
// Conventions: forward DFT uses exp(-i xi x); the derivative multiplier is
// i*xi_a with the Nyquist plane of the differentiated axis zeroed, so odd
// symbols stay conjugate-symmetric and first-order identities hold to
// rounding.
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fracfield/fft.hpp"
#include "fracfield/field.hpp"

namespace fracfield {

// signed mode number in [-N/2, N/2)
inline int signed_mode(int m, int N) { return m < N / 2 ? m : m - N; }

// xi_a for mode m on a grid of half-extent L: fundamental pi/L
inline double wavenumber(int m, int N, double L) {
    return std::numbers::pi / L * signed_mode(m, N);
}

inline std::vector<cplx> to_complex(const ScalarField& f) {
    std::vector<cplx> out(f.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.values[i];
    return out;
}

inline ScalarField to_real(const GridSpec& g, const std::vector<cplx>& data, double support = 0.0) {
    ScalarField f(g, support == 0.0 ? g.L : support);
    for (std::size_t i = 0; i < data.size(); ++i) f.values[i] = data[i].real();
    return f;
}

// Applies sigma(xi) to the spectrum of f (in place on the coefficient array).
// sigma receives the wavevector and the multi-index of modes.
template <class Sigma>
inline void apply_multiplier(std::vector<cplx>& fhat, const GridSpec& g, Sigma&& sigma) {
    for_each_index(g, [&](const Index& m) {
        Point xi{0, 0, 0};
        for (int a = 0; a < g.n; ++a) xi[a] = wavenumber(m[a], g.N, g.L);
        fhat[g.flatten(m)] *= sigma(xi, m);
    });
}

// first derivative along axis; Nyquist plane of that axis zeroed
inline ScalarField derivative(const ScalarField& f, int axis) {
    auto data = to_complex(f);
    fft_nd(data, f.grid.n, f.grid.N, false);
    const int N = f.grid.N;
    apply_multiplier(data, f.grid, [&](const Point& xi, const Index& m) -> cplx {
        if (m[axis] == N / 2) return 0.0;
        return cplx(0.0, xi[axis]);
    });
    fft_nd(data, f.grid.n, f.grid.N, true);
    return to_real(f.grid, data, f.grid.L);
}

inline VectorField gradient(const ScalarField& f) {
    VectorField g(f.grid, f.grid.L);
    for (int a = 0; a < f.grid.n; ++a) g.comps[a] = derivative(f, a);
    return g;
}

inline ScalarField laplacian(const ScalarField& f) {
    auto data = to_complex(f);
    fft_nd(data, f.grid.n, f.grid.N, false);
    const int N = f.grid.N;
    apply_multiplier(data, f.grid, [&](const Point& xi, const Index& m) -> cplx {
        double s = 0.0;
        for (int a = 0; a < f.grid.n; ++a)
            if (m[a] != N / 2) s -= xi[a] * xi[a];
        return s;
    });
    fft_nd(data, f.grid.n, f.grid.N, true);
    return to_real(f.grid, data, f.grid.L);
}

inline VectorField laplacian(const VectorField& v) {
    VectorField out(v.grid, v.grid.L);
    for (int a = 0; a < v.grid.n; ++a) out.comps[a] = laplacian(v.comps[a]);
    return out;
}

// |xi|^2 with full (unzeroed) modes; used by inverse-Laplacian symbols
inline double xi_norm2(const Point& xi, const GridSpec&) {
    return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
}

// Embeds f into the 2x zero-padded grid (same spacing, half-extent 2L),
// physical coordinates preserved.
inline GridSpec padded_grid(const GridSpec& g) {
    GridSpec p = g;
    p.N = 2 * g.N;
    p.L = 2.0 * g.L;
    return p;
}

inline std::vector<cplx> embed_padded(const ScalarField& f) {
    const GridSpec p = padded_grid(f.grid);
    std::vector<cplx> out(p.size(), 0.0);
    const int off = f.grid.N / 2;
    for_each_index(f.grid, [&](const Index& k) {
        Index kp = k;
        for (int a = 0; a < f.grid.n; ++a) kp[a] = k[a] + off;
        out[p.flatten(kp)] = f.values[f.grid.flatten(k)];
    });
    return out;
}

inline ScalarField restrict_padded(const GridSpec& g, const std::vector<cplx>& padded,
                                   double support = 0.0) {
    const GridSpec p = padded_grid(g);
    ScalarField f(g, support == 0.0 ? g.L : support);
    const int off = g.N / 2;
    for_each_index(g, [&](const Index& k) {
        Index kp = k;
        for (int a = 0; a < g.n; ++a) kp[a] = k[a] + off;
        f.values[g.flatten(k)] = padded[p.flatten(kp)].real();
    });
    return f;
}

// Applies a multiplier on the 2x padded grid and restricts back. Used by
// potential-type operators where periodization error matters.
template <class Sigma>
inline ScalarField padded_multiplier_op(const ScalarField& f, Sigma&& sigma) {
    const GridSpec p = padded_grid(f.grid);
    auto data = embed_padded(f);
    fft_nd(data, p.n, p.N, false);
    apply_multiplier(data, p, sigma);
    fft_nd(data, p.n, p.N, true);
    return restrict_padded(f.grid, data);
}

// circular shift by whole cells (tests use this for translation covariance)
inline ScalarField circshift(const ScalarField& f, const Index& s) {
    ScalarField out(f.grid, f.grid.L);
    for_each_index(f.grid, [&](const Index& k) {
        Index src = k;
        for (int a = 0; a < f.grid.n; ++a) {
            src[a] = (k[a] - s[a]) % f.grid.N;
            if (src[a] < 0) src[a] += f.grid.N;
        }
        out.values[f.grid.flatten(k)] = f.values[f.grid.flatten(src)];
    });
    return out;
}

}  // namespace fracfield
