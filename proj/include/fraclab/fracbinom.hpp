#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "fraclab/errors.hpp"

namespace fraclab {

struct FracOrder {
    double t;
    bool is_integer() const { return t == std::floor(t); }
};

struct TruncationSpec {
    double tail_tol = 1e-10;
    std::int64_t j_max_cap = 1000000;
};

// Generalized binomial coefficient C(t,j), stable product recursion.
inline double frac_binomial(double t, std::int64_t j) {
    double c = 1.0;
    for (std::int64_t i = 1; i <= j; ++i) c *= (t - i + 1) / static_cast<double>(i);
    return c;
}

// Certified bound on sum_{j >= m} |C(t,j)| for m > t:
//   |C(t,j)| <= |C(t,m)| ((m+1)/(j+1))^{t+1}  and an integral comparison give
//   tail(m) <= |C(t,m)| (1 + (m+1)/t).
inline double binom_abs_tail_bound(double t, std::int64_t m, double abs_c_m) {
    if (static_cast<double>(m) <= t) return HUGE_VAL;
    return abs_c_m * (1.0 + (m + 1) / t);
}

// Smallest J with certified sum_{j>J}|C(t,j)| <= tail_tol.
// For integer t this is exact at J = t (all later coefficients vanish).
inline std::int64_t truncation_index(double t, const TruncationSpec& spec) {
    if (t == std::floor(t)) return static_cast<std::int64_t>(t);
    const std::int64_t m0 = static_cast<std::int64_t>(std::floor(t)) + 1;
    double c = frac_binomial(t, m0);
    for (std::int64_t m = m0;; ++m) {
        if (binom_abs_tail_bound(t, m, std::abs(c)) <= spec.tail_tol) return m - 1;
        if (m >= spec.j_max_cap)
            throw TruncationFailure("truncation_index: cap " + std::to_string(spec.j_max_cap) +
                                    " reached before tail bound " + std::to_string(spec.tail_tol) +
                                    " (t=" + std::to_string(t) + ")");
        c *= (t - m) / static_cast<double>(m + 1);
    }
}

}  // namespace fraclab
