// Deterministic test-field generation: the compactly supported families the
// inequality ratios are taken over.
//
// Directly windowed kinds (bump, gaussian_bump, radial, filtered_noise) carry
// exact zeros outside their support radius. Derivative-constructed kinds
// (gradient_of_bump, divfree_from_potential) are spectral derivatives of a
// windowed stream: their discrete div/curl identities hold to rounding, at the
// cost of spectrally small tails outside the nominal support.
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "fracfield/field.hpp"
#include "fracfield/rng.hpp"
#include "fracfield/spectral.hpp"

namespace fracfield {

enum class RecipeKind {
    bump,
    gaussian_bump,
    gradient_of_bump,
    divfree_from_potential,
    radial,
    filtered_noise,
};

struct FieldRecipe {
    RecipeKind kind = RecipeKind::bump;
    double radius = 1.0;     // support radius R
    Point center{0, 0, 0};   // |center| + R <= L/2 required
    double amplitude = 1.0;
    double sigma = 0.0;      // gaussian width; default R/3
    double cutoff = 0.0;     // noise low-pass wavenumber; default 2*pi/R
    std::uint64_t seed = 1;
    RecipeKind stream = RecipeKind::bump;  // potential kind for derivative recipes
};

inline RecipeKind recipe_kind_from_string(const std::string& s) {
    static const std::map<std::string, RecipeKind> m = {
        {"bump", RecipeKind::bump},
        {"gaussian_bump", RecipeKind::gaussian_bump},
        {"gradient_of_bump", RecipeKind::gradient_of_bump},
        {"divfree_from_potential", RecipeKind::divfree_from_potential},
        {"radial", RecipeKind::radial},
        {"filtered_noise", RecipeKind::filtered_noise},
    };
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown recipe kind: " + s);
    return it->second;
}

inline std::string to_string(RecipeKind k) {
    switch (k) {
        case RecipeKind::bump: return "bump";
        case RecipeKind::gaussian_bump: return "gaussian_bump";
        case RecipeKind::gradient_of_bump: return "gradient_of_bump";
        case RecipeKind::divfree_from_potential: return "divfree_from_potential";
        case RecipeKind::radial: return "radial";
        case RecipeKind::filtered_noise: return "filtered_noise";
    }
    return "?";
}

namespace detail {

// exp(1 - 1/(1-s^2)) for s in [0,1): unit value at s=0, exact zero for s>=1
inline double bump_profile(double s) {
    if (s >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

inline void check_support(const GridSpec& g, const FieldRecipe& r) {
    double c = 0.0;
    for (int a = 0; a < g.n; ++a) c += r.center[a] * r.center[a];
    if (std::sqrt(c) + r.radius > g.L / 2.0 + 1e-12)
        throw std::invalid_argument("recipe support exceeds L/2 padding");
}

inline double global_support(const GridSpec& g, const FieldRecipe& r) {
    double c = 0.0;
    for (int a = 0; a < g.n; ++a) c += r.center[a] * r.center[a];
    return std::sqrt(c) + r.radius;
}

inline ScalarField scalar_bump(const GridSpec& g, const FieldRecipe& r, bool gaussian) {
    ScalarField f(g, 0.0);
    const double sig = r.sigma > 0.0 ? r.sigma : r.radius / 3.0;
    for_each_index(g, [&](const Index& k) {
        const Point x = g.point(k);
        double d2 = 0.0;
        for (int a = 0; a < g.n; ++a) {
            const double d = x[a] - r.center[a];
            d2 += d * d;
        }
        const double s = std::sqrt(d2) / r.radius;
        double v = bump_profile(s);
        if (gaussian && v != 0.0) v = std::exp(-d2 / (2.0 * sig * sig)) * v;
        f.values[g.flatten(k)] = r.amplitude * v;
    });
    f.support_radius = global_support(g, r);
    return f;
}

inline ScalarField scalar_noise(const GridSpec& g, const FieldRecipe& r) {
    // seeded white noise, spectral Gaussian low-pass, bump window, unit sup
    ScalarField white(g, 0.0);
    Rng rng(r.seed);
    for (auto& v : white.values) v = rng.normal();
    const double kc = r.cutoff > 0.0 ? r.cutoff : 2.0 * std::numbers::pi / r.radius;
    auto data = to_complex(white);
    fft_nd(data, g.n, g.N, false);
    apply_multiplier(data, g, [&](const Point& xi, const Index&) -> cplx {
        const double k2 = xi_norm2(xi, g);
        return std::exp(-k2 / (kc * kc));
    });
    fft_nd(data, g.n, g.N, true);
    ScalarField f = to_real(g, data);
    const ScalarField window = scalar_bump(g, r, false);
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] *= window.values[i];
    const double m = f.max_abs();
    if (m > 0.0)
        for (auto& v : f.values) v *= r.amplitude / m;
    f.support_radius = global_support(g, r);
    return f;
}

inline ScalarField stream_field(const GridSpec& g, const FieldRecipe& r, std::uint64_t seed) {
    FieldRecipe rs = r;
    rs.kind = r.stream;
    rs.seed = seed;
    switch (r.stream) {
        case RecipeKind::bump:
        case RecipeKind::radial: return scalar_bump(g, rs, false);
        case RecipeKind::gaussian_bump: return scalar_bump(g, rs, true);
        case RecipeKind::filtered_noise: return scalar_noise(g, rs);
        default: throw std::invalid_argument("stream kind must be scalar");
    }
}

}  // namespace detail

inline ScalarField generate_scalar(const GridSpec& g, const FieldRecipe& r) {
    detail::check_support(g, r);
    switch (r.kind) {
        case RecipeKind::bump:
        case RecipeKind::radial: return detail::scalar_bump(g, r, false);
        case RecipeKind::gaussian_bump: return detail::scalar_bump(g, r, true);
        case RecipeKind::filtered_noise: return detail::scalar_noise(g, r);
        default:
            throw std::invalid_argument("recipe kind " + to_string(r.kind) + " is vector-valued");
    }
}

inline VectorField generate_vector(const GridSpec& g, const FieldRecipe& r) {
    detail::check_support(g, r);
    VectorField out(g);
    switch (r.kind) {
        case RecipeKind::gradient_of_bump: {
            const ScalarField phi = detail::stream_field(g, r, r.seed);
            out = gradient(phi);
            out.set_support_radius(phi.support_radius);
            return out;
        }
        case RecipeKind::divfree_from_potential: {
            if (g.n == 2) {
                const ScalarField psi = detail::stream_field(g, r, r.seed);
                out.comps[0] = derivative(psi, 1);
                out.comps[1] = derivative(psi, 0);
                for (auto& v : out.comps[1].values) v = -v;
                out.set_support_radius(psi.support_radius);
            } else {
                std::vector<ScalarField> A;
                for (int c = 0; c < 3; ++c)
                    A.push_back(detail::stream_field(g, r, r.seed * 3 + static_cast<std::uint64_t>(c)));
                auto sub = [](ScalarField a, const ScalarField& b) {
                    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] -= b.values[i];
                    return a;
                };
                out.comps[0] = sub(derivative(A[2], 1), derivative(A[1], 2));
                out.comps[1] = sub(derivative(A[0], 2), derivative(A[2], 0));
                out.comps[2] = sub(derivative(A[1], 0), derivative(A[0], 1));
                double rad = 0.0;
                for (const auto& a : A) rad = std::max(rad, a.support_radius);
                out.set_support_radius(rad);
            }
            return out;
        }
        default: {
            for (int c = 0; c < g.n; ++c) {
                FieldRecipe rc = r;
                rc.seed = r.seed * static_cast<std::uint64_t>(g.n) + static_cast<std::uint64_t>(c);
                out.comps[c] = generate_scalar(g, rc);
            }
            return out;
        }
    }
}

}  // namespace fracfield
