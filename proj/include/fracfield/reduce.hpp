// Deterministic reductions: fixed-order pairwise summation.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracfield {

// Pairwise sum in index order; result independent of thread count by construction.
inline double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <class F>
inline double pairwise_sum_generate(std::size_t n, F&& term) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += term(i);
        return s;
    }
    // materialize in blocks to keep the recursion shallow and the order fixed
    std::vector<double> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = term(i);
    return pairwise_sum(buf);
}

}  // namespace fracfield
