// Scalar, vector and matrix fields sampled on a GridSpec.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracfield/grid.hpp"
#include "fracfield/reduce.hpp"

namespace fracfield {

struct ScalarField {
    GridSpec grid;
    std::vector<double> values;     // row-major over grid nodes
    double support_radius = 0.0;    // supp f in B_R(0); grid.L means "whole box"

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g, double support = 0.0)
        : grid(g), values(g.size(), 0.0), support_radius(support == 0.0 ? g.L : support) {}

    double& at(const Index& k) { return values[grid.flatten(k)]; }
    double at(const Index& k) const { return values[grid.flatten(k)]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    bool all_finite() const {
        return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
    }
    // plain L1 quadrature, deterministic
    double l1() const {
        std::vector<double> a(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) a[i] = std::abs(values[i]);
        return pairwise_sum(a) * grid.cell_volume();
    }
};

struct VectorField {
    GridSpec grid;
    std::vector<ScalarField> comps;  // grid.n components sharing grid and support

    VectorField() = default;
    explicit VectorField(const GridSpec& g, double support = 0.0) : grid(g) {
        comps.assign(static_cast<std::size_t>(g.n), ScalarField(g, support));
    }
    double support_radius() const { return comps.empty() ? 0.0 : comps[0].support_radius; }
    void set_support_radius(double r) {
        for (auto& c : comps) c.support_radius = r;
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& c : comps) m = std::max(m, c.max_abs());
        return m;
    }
};

// n x n matrix of scalar fields, entry (i,j) at index i*n+j.
struct MatrixField {
    GridSpec grid;
    std::vector<ScalarField> entries;

    MatrixField() = default;
    explicit MatrixField(const GridSpec& g, double support = 0.0) : grid(g) {
        entries.assign(static_cast<std::size_t>(g.n) * g.n, ScalarField(g, support));
    }
    ScalarField& entry(int i, int j) { return entries[static_cast<std::size_t>(i) * grid.n + j]; }
    const ScalarField& entry(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * grid.n + j];
    }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

// pointwise Euclidean magnitude of a component family
template <class FieldLike>
inline ScalarField magnitude(const FieldLike& v) {
    ScalarField out(v.grid);
    const auto& comps = [&]() -> const std::vector<ScalarField>& {
        if constexpr (std::is_same_v<FieldLike, MatrixField>) return v.entries;
        else return v.comps;
    }();
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        double s = 0.0;
        for (const auto& c : comps) s += c.values[i] * c.values[i];
        out.values[i] = std::sqrt(s);
    }
    out.support_radius = comps.empty() ? out.grid.L : comps[0].support_radius;
    return out;
}

// relative L2 distance over the whole grid (or a centered ball when window > 0)
inline double rel_l2_error(const ScalarField& a, const ScalarField& b, double window = 0.0) {
    require_same_grid(a.grid, b.grid);
    std::vector<double> num, den;
    num.reserve(a.values.size());
    den.reserve(a.values.size());
    for_each_index(a.grid, [&](const Index& k) {
        if (window > 0.0 && norm2(a.grid.point(k)) > window) return;
        const std::size_t f = a.grid.flatten(k);
        const double d = a.values[f] - b.values[f];
        num.push_back(d * d);
        den.push_back(b.values[f] * b.values[f]);
    });
    const double dd = pairwise_sum(den);
    if (dd == 0.0) return std::sqrt(pairwise_sum(num));
    return std::sqrt(pairwise_sum(num) / dd);
}

inline double rel_l2_error(const VectorField& a, const VectorField& b, double window = 0.0) {
    require_same_grid(a.grid, b.grid);
    double num = 0.0, den = 0.0;
    for (int c = 0; c < a.grid.n; ++c) {
        std::vector<double> nn, dd;
        for_each_index(a.grid, [&](const Index& k) {
            if (window > 0.0 && norm2(a.grid.point(k)) > window) return;
            const std::size_t f = a.grid.flatten(k);
            const double d = a.comps[c].values[f] - b.comps[c].values[f];
            nn.push_back(d * d);
            dd.push_back(b.comps[c].values[f] * b.comps[c].values[f]);
        });
        num += pairwise_sum(nn);
        den += pairwise_sum(dd);
    }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

}  // namespace fracfield
