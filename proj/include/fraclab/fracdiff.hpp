#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

#include "fraclab/fracbinom.hpp"
#include "fraclab/special.hpp"
#include "fraclab/trigpoly.hpp"

namespace fraclab {

// ---------------------------------------------------------------------------
// Per-mode action of the fractional difference on e^{i nu x}:
//   m(t, nu, h) = e^{i nu t h} * sum_j (-1)^j C(t,j) e^{-i nu j h}
//               = e^{i nu t h} * (1 - e^{-i nu h})^t   (Abel limit of the series)
// The series value is evaluated through the polar identity
//   1 - e^{-i theta} = 2 sin(theta/2) e^{i (pi - theta)/2},  theta in (0, 2pi),
// whose argument lies inside (-pi/2, pi/2), so the value agrees with the
// absolutely convergent series on the whole circle; no complex power
// function and no branch selection is involved. Integer orders use the
// finite classical sum, which is exact.
// ---------------------------------------------------------------------------

namespace detail {

inline cplx polar_series_value(double t, double theta_reduced) {
    if (theta_reduced == 0.0) return cplx(0.0, 0.0);
    const double mod = std::exp(t * std::log(2.0 * std::sin(0.5 * theta_reduced)));
    const double arg = t * 0.5 * (M_PI - theta_reduced);
    return cplx(mod * std::cos(arg), mod * std::sin(arg));
}

inline cplx integer_series_value(double t, double theta) {
    const auto k = static_cast<std::int64_t>(t);
    cplx acc(0.0, 0.0);
    double c = 1.0;
    for (std::int64_t j = 0; j <= k; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * c * cplx(std::cos(j * theta), -std::sin(j * theta));
        c *= (t - j) / static_cast<double>(j + 1);
    }
    return acc;
}

}  // namespace detail

inline cplx frac_multiplier(double t, int nu, double h) {
    if (nu == 0 || h == 0.0) return cplx(0.0, 0.0);
    const double theta = nu * h;
    const cplx pre(std::cos(nu * t * h), std::sin(nu * t * h));
    if (t == std::floor(t)) return pre * detail::integer_series_value(t, theta);
    return pre * detail::polar_series_value(t, reduce_two_pi(theta));
}

// m(t, nu, h) / h^t for nu > 0, h > 0; stays O(nu^t) down to h -> 0.
inline cplx frac_multiplier_normalized(double t, int nu, double h) {
    const double thr = reduce_two_pi(nu * h);
    if (thr == 0.0) return cplx(0.0, 0.0);
    const double mod = std::exp(t * (std::log(2.0 * std::sin(0.5 * thr)) - std::log(h)));
    const double arg = t * 0.5 * (M_PI - thr) + nu * t * h;
    return cplx(mod * std::cos(arg), mod * std::sin(arg));
}

// ---------------------------------------------------------------------------
// Series evaluations with certified remainders (test oracles).
// ---------------------------------------------------------------------------

struct SeriesValue {
    cplx value;
    double remainder_bound;
};

// Raw partial sum to index J. The remainder is certified two ways and the
// smaller bound is kept: the plain absolute tail, and one summation by parts
// against the geometric sums of z^j (coefficient differences of (1-z)^t are
// the coefficients of (1-z)^{t+1}).
inline SeriesValue frac_multiplier_series(double t, int nu, double h, std::int64_t J) {
    const double theta = nu * h;
    cplx acc(0.0, 0.0);
    double c = 1.0;
    for (std::int64_t j = 0; j <= J; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * c * cplx(std::cos(j * theta), -std::sin(j * theta));
        c *= (t - j) / static_cast<double>(j + 1);
    }
    double bound = 0.0;
    if (t != std::floor(t) || J < static_cast<std::int64_t>(t)) {
        const double abs_next = std::abs(frac_binomial(t, J + 1));
        double plain = binom_abs_tail_bound(t, J + 1, abs_next);
        const double thr = reduce_two_pi(theta);
        double parts = HUGE_VAL;
        if (thr != 0.0 && static_cast<double>(J + 2) > t + 1.0) {
            const double dist = 2.0 * std::abs(std::sin(0.5 * thr));  // |1 - z|
            const double diff_tail =
                binom_abs_tail_bound(t + 1.0, J + 2, std::abs(frac_binomial(t + 1.0, J + 2)));
            parts = (2.0 / dist) * (abs_next + diff_tail);
        }
        bound = std::min(plain, parts);
    }
    const cplx pre(std::cos(nu * t * h), std::sin(nu * t * h));
    return {pre * acc, bound};
}

// Lifted evaluation: (1-z)^t = (1-z)^{-m} sum_j (-1)^j C(t+m, j) z^j, an exact
// Cauchy-product identity with the finite polynomial (1-z)^m. The lifted
// series decays like j^{-t-m-1}, so modest J certifies tiny tails as long as
// z stays away from 1.
inline SeriesValue frac_multiplier_series_lifted(double t, int nu, double h, int m_lift,
                                                 const TruncationSpec& spec) {
    const double theta = nu * h;
    const double thr = reduce_two_pi(theta);
    const cplx pre(std::cos(nu * t * h), std::sin(nu * t * h));
    if (thr == 0.0) return {cplx(0.0, 0.0), 0.0};
    const cplx z(std::cos(thr), -std::sin(thr));
    const cplx one_minus_z = cplx(1.0, 0.0) - z;
    const double dist = std::abs(one_minus_z);
    const double tl = t + m_lift;
    const std::int64_t J = truncation_index(tl, spec);
    cplx acc(0.0, 0.0);
    double c = 1.0;
    cplx zj(1.0, 0.0);
    for (std::int64_t j = 0; j <= J; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * c * zj;
        c *= (tl - j) / static_cast<double>(j + 1);
        zj *= z;
    }
    cplx denom(1.0, 0.0);
    for (int i = 0; i < m_lift; ++i) denom *= one_minus_z;
    const double tail = binom_abs_tail_bound(tl, J + 1, std::abs(frac_binomial(tl, J + 1)));
    return {pre * acc / denom, tail / std::pow(dist, m_lift)};
}

// ---------------------------------------------------------------------------
// The fractional difference operator on trigonometric polynomials.
// Shifts x + (t-j)h are never discretized: the action is exact per mode.
// ---------------------------------------------------------------------------
inline TrigPoly apply_frac_difference(const TrigPoly& f, FracOrder order, double h,
                                      const TruncationSpec& spec = {}) {
    (void)spec;  // multiplier evaluation certifies beyond any requested tolerance
    const double t = order.t;
    TrigPoly g(f.degree());
    for (int nu = 1; nu <= f.degree(); ++nu)
        g.set_coeff(nu, frac_multiplier(t, nu, h) * f.coeff(nu));
    g.set_coeff(0, cplx(0.0, 0.0));  // sum_j (-1)^j C(t,j) = 0 for t > 0
    return g;
}

// Literal truncated-series evaluation of (Delta_h^t f)(x) with a certified
// remainder bound; the slow path the fast ones are tested against.
inline std::pair<double, double> frac_difference_direct_eval(const TrigPoly& f, double t, double h,
                                                             double x, std::int64_t J) {
    KahanSum acc;
    double c = 1.0;
    for (std::int64_t j = 0; j <= J; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * c * f.eval(x + (t - j) * h);
        c *= (t - j) / static_cast<double>(j + 1);
    }
    double bound = 0.0;
    if (t != std::floor(t)) {
        const double abs_next = std::abs(frac_binomial(t, J + 1));
        const double plain = binom_abs_tail_bound(t, J + 1, abs_next);
        const double diff_tail =
            binom_abs_tail_bound(t + 1.0, J + 2, std::abs(frac_binomial(t + 1.0, J + 2)));
        KahanSum per_mode;
        for (int nu = 1; nu <= f.degree(); ++nu) {
            const double thr = reduce_two_pi(nu * h);
            double b = plain;
            if (thr != 0.0) {
                const double dist = 2.0 * std::abs(std::sin(0.5 * thr));
                b = std::min(b, (2.0 / dist) * (abs_next + diff_tail));
            }
            per_mode += 2.0 * std::abs(f.coeff(nu)) * b;
        }
        per_mode += std::abs(f.coeff(0)) * plain;
        bound = per_mode.value();
    }
    return {acc.value(), bound};
}

}  // namespace fraclab
