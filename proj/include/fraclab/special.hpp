#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fraclab/kahan.hpp"

namespace fraclab {

inline constexpr double kEulerGamma = 0.5772156649015328606;
inline constexpr double kTwoPi = 6.283185307179586477;

// Riemann zeta for real s != 1 via Borwein's alternating-series algorithm.
// Accurate to ~1e-15 for s in (-4, 60), which covers every exponent used here.
inline double riemann_zeta(double s) {
    if (s == 1.0) throw std::domain_error("riemann_zeta: pole at s=1");
    constexpr int n = 48;
    static const std::vector<double> d = [] {
        std::vector<double> dv(n + 1);
        // d_k = n * sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)
        double term = 1.0;  // i = 0 term of the inner sum times n: handled below
        (void)term;
        for (int k = 0; k <= n; ++k) {
            double sum = 0.0, t = 1.0;  // t = (n+i-1)!4^i/((n-i)!(2i)!) at i=0 -> (n-1)!/n! = 1/n
            t = 1.0 / n;
            for (int i = 0; i <= k; ++i) {
                sum += t;
                t *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
            }
            dv[k] = n * sum;
        }
        return dv;
    }();
    KahanSum acc;
    for (int k = 0; k < n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc += sign * (d[k] - d[n]) * std::pow(static_cast<double>(k + 1), -s);
    }
    const double eta = -acc.value() / d[n];
    return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

// S_lambda(v) = sum_{k>=1} (2 pi k + v)^{-lambda},  lambda > 1, |v| <= pi.
// Direct head + Euler-Maclaurin tail from k = K0+1.
inline double hurwitz_window_sum(double lambda, double v) {
    constexpr int K0 = 16;
    KahanSum head;
    for (int k = 1; k <= K0; ++k) head += std::pow(kTwoPi * k + v, -lambda);
    const double a = kTwoPi * (K0 + 1) + v;
    const double fa = std::pow(a, -lambda);
    const double integral = a * fa / (kTwoPi * (lambda - 1.0));
    const double f1 = -lambda * kTwoPi * fa / a;
    const double f3 = -lambda * (lambda + 1.0) * (lambda + 2.0) * std::pow(kTwoPi, 3) * fa / (a * a * a);
    return head.value() + integral + 0.5 * fa - f1 / 12.0 + f3 / 720.0;
}

// Window weight for folding integrals of 2pi-periodic data over (pi, inf)
// back onto (0, pi):  T_lambda(v) = S_lambda(v) + S_lambda(-v).
inline double window_weight(double lambda, double v) {
    return hurwitz_window_sum(lambda, v) + hurwitz_window_sum(lambda, -v);
}

// Partial power sum  sum_{nu=1}^{m} nu^{-alpha}  with m = 2^{l2} allowed to be
// astronomically large; everything runs on ln m. Direct Kahan loop for small m,
// Euler-Maclaurin with the zeta constant otherwise.
inline double power_sum_leq(double alpha, double log2_m) {
    if (log2_m <= 0.0) return 1.0;  // m = 1
    if (log2_m <= 21.0) {
        const std::uint64_t m = static_cast<std::uint64_t>(std::llround(std::pow(2.0, log2_m)));
        KahanSum acc;
        for (std::uint64_t nu = 1; nu <= m; ++nu)
            acc += std::pow(static_cast<double>(nu), -alpha);
        return acc.value();
    }
    const double lnm = log2_m * std::log(2.0);
    if (std::abs(alpha - 1.0) < 1e-13)
        return lnm + kEulerGamma + 0.5 * std::exp(-lnm);
    return riemann_zeta(alpha) + std::exp((1.0 - alpha) * lnm) / (1.0 - alpha) +
           0.5 * std::exp(-alpha * lnm) - (alpha / 12.0) * std::exp(-(alpha + 1.0) * lnm);
}

// sum_{2^{l2a} < nu <= 2^{l2b}} nu^{-alpha}
inline double power_sum_range(double alpha, double log2_a, double log2_b) {
    if (log2_b <= log2_a) return 0.0;
    const double s = power_sum_leq(alpha, log2_b) - power_sum_leq(alpha, log2_a);
    return s > 0.0 ? s : 0.0;
}

// Gamma(2t+1)/Gamma(t+1)^2: the mean of (2|sin(w/2)|)^{2t} over a period.
inline double central_binomial(double t) {
    return std::exp(std::lgamma(2.0 * t + 1.0) - 2.0 * std::lgamma(t + 1.0));
}

// Reduce x into [0, 2pi) against the *true* 2pi. The product k * hi is
// recovered exactly with an fma, so tiny reduced phases survive with
// absolute error ~ k * ulp(lo) instead of k * ulp(2pi).
inline double reduce_two_pi(double x) {
    constexpr double hi = 6.283185307179586232e+00;  // leading bits of 2pi
    constexpr double lo = 2.449293598294706414e-16;  // remainder
    double k = std::floor(x / (hi + lo));
    for (int pass = 0; pass < 3; ++pass) {
        const double p = k * hi;
        const double perr = std::fma(k, hi, -p);
        const double r = ((x - p) - perr) - k * lo;
        if (r < 0.0) {
            k -= 1.0;
            continue;
        }
        if (r >= hi + lo) {
            k += 1.0;
            continue;
        }
        return r;
    }
    return 0.0;
}

}  // namespace fraclab
