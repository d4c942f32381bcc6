// Deterministic random streams. Distribution mapping is written out by hand
// (std::normal_distribution is implementation-defined); equal seeds give
// bit-identical streams on every platform with IEEE doubles.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace fracfield {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0,1) with 53-bit mantissa
    double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

    // Box-Muller; consumes two uniforms per pair
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    // uniform point on S^{n-1}
    void unit_vector(int n, double* out) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            out[i] = normal();
            s += out[i] * out[i];
        }
        s = std::sqrt(s);
        if (s == 0.0) {
            out[0] = 1.0;
            for (int i = 1; i < n; ++i) out[i] = 0.0;
            return;
        }
        for (int i = 0; i < n; ++i) out[i] /= s;
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace fracfield
