// Uniform centered grids on [-L,L)^n, n in {2,3}.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracfield {

using Index = std::array<int, 3>;  // unused axes fixed at 0
using Point = std::array<double, 3>;

inline bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

struct GridSpec {
    int n = 0;       // dimension, 2 or 3
    int N = 0;       // points per axis, power of two >= 8
    double L = 0.0;  // half-extent; domain [-L,L)^n
    double h = 0.0;  // spacing, 2L/N

    std::size_t size() const {
        std::size_t s = 1;
        for (int a = 0; a < n; ++a) s *= static_cast<std::size_t>(N);
        return s;
    }

    // row-major flattening, axis 0 slowest
    std::size_t flatten(const Index& k) const {
        std::size_t f = 0;
        for (int a = 0; a < n; ++a) f = f * N + static_cast<std::size_t>(k[a]);
        return f;
    }
    Index unflatten(std::size_t f) const {
        Index k{0, 0, 0};
        for (int a = n - 1; a >= 0; --a) {
            k[a] = static_cast<int>(f % N);
            f /= N;
        }
        return k;
    }

    double coord(int k) const { return -L + h * k; }
    Point point(const Index& k) const {
        Point x{0.0, 0.0, 0.0};
        for (int a = 0; a < n; ++a) x[a] = coord(k[a]);
        return x;
    }
    double cell_volume() const { return std::pow(h, n); }

    bool operator==(const GridSpec&) const = default;
};

inline double norm2(const Point& x) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

inline GridSpec make_grid(int n, int N, double L) {
    if (n != 2 && n != 3) throw std::invalid_argument("make_grid: n must be 2 or 3, got " + std::to_string(n));
    if (N < 8 || !is_power_of_two(N))
        throw std::invalid_argument("make_grid: N must be a power of two >= 8, got " + std::to_string(N));
    if (!(L > 0.0)) throw std::invalid_argument("make_grid: L must be positive");
    GridSpec g;
    g.n = n;
    g.N = N;
    g.L = L;
    g.h = 2.0 * L / N;
    return g;
}

// Iterates all multi-indices of a grid in row-major order.
template <class F>
inline void for_each_index(const GridSpec& g, F&& f) {
    Index k{0, 0, 0};
    if (g.n == 2) {
        for (k[0] = 0; k[0] < g.N; ++k[0])
            for (k[1] = 0; k[1] < g.N; ++k[1]) f(k);
    } else {
        for (k[0] = 0; k[0] < g.N; ++k[0])
            for (k[1] = 0; k[1] < g.N; ++k[1])
                for (k[2] = 0; k[2] < g.N; ++k[2]) f(k);
    }
}

}  // namespace fracfield
