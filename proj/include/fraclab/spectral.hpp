#pragma once

#include <array>
#include <cmath>

#include "fraclab/gauss_legendre.hpp"
#include "fraclab/kahan.hpp"
#include "fraclab/special.hpp"
#include "fraclab/trigpoly.hpp"

namespace fraclab {

// ---------------------------------------------------------------------------
// J(s,t) = 2 * int_0^inf (2|sin(w/2)|)^{2t} w^{-1-2s} dw,   0 < s < t.
//
// This is the universal per-mode h-integral of the p=2 seminorm: substituting
// w = |nu| h shows  int |2 sin(nu h/2)|^{2t} |h|^{-1-2s} dh = |nu|^{2s} J(s,t).
//
// Pieces:
//   * (0, pi/16]: exact power series. (2 sin(w/2))^{2t} = w^{2t} q(w) with
//     q = exp(2t ln sinc(w/2)); integrating the series of q termwise keeps
//     full accuracy straight through s -> t, where the mass concentrates at
//     scales w ~ e^{-1/(t-s)} no sampling rule can reach.
//   * [pi/16, pi]: Gauss-Legendre on dyadic cells (smooth integrand).
//   * (pi, inf): the integrand is w^{-1-2s} times a 2pi-periodic factor;
//     folding onto (0, pi] turns the weight into the Hurwitz-type window
//     weight T_lambda, plus a closed small-w tail.
// ---------------------------------------------------------------------------

namespace detail {

// q(w) = exp(2t ln sinc(w/2)) = sum_m a_m (w^2/4)^m;  ln sinc u = -sum_k z2k/(k pi^{2k}) u^{2k}.
template <int K = 12>
inline std::array<double, K + 1> sinc_exp_series(double t) {
    std::array<double, K + 1> p{};  // p[k] = coefficient of u^{2k} in 2t*ln sinc u
    for (int k = 1; k <= K; ++k)
        p[k] = -2.0 * t * riemann_zeta(2.0 * k) / (k * std::pow(M_PI, 2.0 * k));
    std::array<double, K + 1> a{};
    a[0] = 1.0;
    for (int m = 1; m <= K; ++m) {
        double s = 0.0;
        for (int k = 1; k <= m; ++k) s += k * p[k] * a[m - k];
        a[m] = s / m;
    }
    return a;
}

}  // namespace detail

inline double butzer_mode_integral(double s, double t) {
    constexpr double eps = M_PI / 16.0;
    const auto a = detail::sinc_exp_series(t);
    // near part: sum_m a_m 4^{-m} eps^{2(t-s)+2m} / (2(t-s)+2m)
    KahanSum near;
    double pow4 = 1.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        near += a[m] * pow4 * std::pow(eps, 2.0 * (t - s) + 2.0 * m) / (2.0 * (t - s) + 2.0 * m);
        pow4 *= 0.25;
    }
    const double lambda = 1.0 + 2.0 * s;
    const auto g = [t](double w) { return std::pow(2.0 * std::abs(std::sin(0.5 * w)), 2.0 * t); };
    // mid part on [pi/16, pi]
    KahanSum mid;
    double lo = eps;
    for (int c = 0; c < 4; ++c) {
        const double hi = 2.0 * lo;
        mid += gl_integrate([&](double w) { return g(w) * std::pow(w, -lambda); }, lo,
                            std::min(hi, M_PI), 24);
        lo = hi;
    }
    // far part folded onto (0, pi]; g has a w^{2t} cusp at 0, so the cells
    // shrink dyadically and the remainder closes with the cusp power.
    KahanSum far;
    double hi = M_PI;
    for (int c = 0; c < 42; ++c) {
        const double lo2 = 0.5 * hi;
        far += gl_integrate([&](double v) { return g(v) * window_weight(lambda, v); }, lo2, hi, 24);
        hi = lo2;
        if (hi < 1e-10) break;
    }
    far += window_weight(lambda, 0.0) * std::pow(hi, 2.0 * t + 1.0) / (2.0 * t + 1.0);
    return 2.0 * (near.value() + mid.value() + far.value());
}

// ||(-Delta)^{r/2} f||_{L^2} by Parseval (zero mode annihilated).
inline double hs_norm_p2(const TrigPoly& f, double r) {
    return std::sqrt(2.0 * M_PI * f.coeff_sq_weighted_sum(2.0 * r));
}

inline double l2_norm_exact(const TrigPoly& f) {
    return std::sqrt(2.0 * M_PI * (f.coeff_sq_weighted_sum(0.0) + std::norm(f.coeff(0))));
}

// Parseval route for the p=2 fractional seminorm:
//   ||f||^2 = 2 pi J(s,t) sum_{nu != 0} |c_nu|^2 |nu|^{2s}.
inline double butzer_seminorm_spectral_p2(const TrigPoly& f, double s, double t) {
    return std::sqrt(2.0 * M_PI * butzer_mode_integral(s, t) * f.coeff_sq_weighted_sum(2.0 * s));
}

}  // namespace fraclab
