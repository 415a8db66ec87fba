#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "fraclab/errors.hpp"
#include "fraclab/gauss_legendre.hpp"
#include "fraclab/kahan.hpp"

namespace fraclab {

// Finitely supported real sequence over Z.
struct Seq {
    int j_min = 0;
    std::vector<double> values;  // values[i] sits at index j_min + i

    int j_max() const { return j_min + static_cast<int>(values.size()) - 1; }

    static Seq spike(int j, double v = 1.0) { return Seq{j, {v}}; }

    Seq scaled(double lambda) const {
        Seq s = *this;
        for (auto& v : s.values) v *= lambda;
        return s;
    }

    int support_size() const {
        int n = 0;
        for (double v : values)
            if (v != 0.0) ++n;
        return n;
    }
};

struct PairParams {
    double s0;
    double s1;
    double q;
};

struct InterpParams {
    double theta;
    double p;
};

struct IntegralSpec {
    int l_span = 48;         // half-width (in dyadic steps) for brute-force ranges
    double tail_tol = 1e-10; // relative certification of the interpolation integral
};

// || xi ||_{l_q^s} = (sum 2^{j s q} |xi_j|^q)^{1/q}
inline double wlq_norm(const Seq& xi, double s, double q) {
    KahanSum acc;
    for (std::size_t i = 0; i < xi.values.size(); ++i) {
        const double v = std::abs(xi.values[i]);
        if (v == 0.0) continue;
        const int j = xi.j_min + static_cast<int>(i);
        acc += std::pow(std::exp2(j * s) * v, q);
    }
    return std::pow(acc.value(), 1.0 / q);
}

// Exact closed form of the modified K-functional on the weighted pair:
//   K_q(u, xi)^q = sum_j min(2^{j s0}, 2^{j s1} u)^q |xi_j|^q.
// This is the infimum over decompositions that assign each coordinate wholly
// to one side, which is how the dyadic splittings in the proofs decompose.
inline double k_seq(double u, const Seq& xi, const PairParams& pp) {
    KahanSum acc;
    for (std::size_t i = 0; i < xi.values.size(); ++i) {
        const double v = std::abs(xi.values[i]);
        if (v == 0.0) continue;
        const int j = xi.j_min + static_cast<int>(i);
        acc += std::pow(std::min(std::exp2(j * pp.s0), std::exp2(j * pp.s1) * u) * v, pp.q);
    }
    return std::pow(acc.value(), 1.0 / pp.q);
}

// (theta (1-theta) q)^{1/q}; 1 when q = infinity.
inline double norm_factor(double theta, double q) {
    if (std::isinf(q)) return 1.0;
    return std::pow(theta * (1.0 - theta) * q, 1.0 / q);
}

// sup_u K_q(u, xi) and sup_u K_q(u, xi)/u, attained at the endpoints.
inline double sup_k(const Seq& xi, const PairParams& pp) { return wlq_norm(xi, pp.s0, pp.q); }
inline double sup_k_over_u(const Seq& xi, const PairParams& pp) {
    return wlq_norm(xi, pp.s1, pp.q);
}

// ---------------------------------------------------------------------------
// interp_norm: ( int_0^inf (u^{-theta} K_q(u, xi))^p du/u )^{1/p}.
//
// K_q is piecewise smooth with breakpoints u_j = 2^{-j(s1-s0)} on the support:
// between consecutive breakpoints K_q(u)^q = P + Q u^q with saturated mass P
// and still-linear mass Q. Cells integrate by adaptive Gauss-Legendre in
// log u; both tails close in exact power form (all-linear below the smallest
// breakpoint, all-saturated above the largest).
// ---------------------------------------------------------------------------
inline double interp_norm(const Seq& xi, const PairParams& pp, const InterpParams& ip,
                          const IntegralSpec& spec = {}) {
    if (!(ip.theta > 0.0 && ip.theta < 1.0)) throw UsageError("interp_norm: theta in (0,1)");
    if (!(pp.s0 < pp.s1)) throw UsageError("interp_norm: need s0 < s1");
    struct Mode {
        double u;        // breakpoint
        double wq0, wq1; // (2^{j s0} |xi_j|)^q and (2^{j s1} |xi_j|)^q
    };
    std::vector<Mode> modes;
    for (std::size_t i = 0; i < xi.values.size(); ++i) {
        const double v = std::abs(xi.values[i]);
        if (v == 0.0) continue;
        const int j = xi.j_min + static_cast<int>(i);
        modes.push_back({std::exp2(-j * (pp.s1 - pp.s0)),
                         std::pow(std::exp2(j * pp.s0) * v, pp.q),
                         std::pow(std::exp2(j * pp.s1) * v, pp.q)});
    }
    if (modes.empty()) return 0.0;
    std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) { return a.u < b.u; });

    const double th = ip.theta, p = ip.p, q = pp.q;
    KahanSum total;
    // below the smallest breakpoint every coordinate is linear in u
    {
        KahanSum bq;
        for (const auto& m : modes) bq += m.wq1;
        const double b = std::pow(bq.value(), 1.0 / q);
        total += std::pow(b, p) * std::pow(modes.front().u, (1.0 - th) * p) / ((1.0 - th) * p);
    }
    // above the largest breakpoint every coordinate is saturated
    {
        KahanSum aq;
        for (const auto& m : modes) aq += m.wq0;
        const double a = std::pow(aq.value(), 1.0 / q);
        total += std::pow(a, p) * std::pow(modes.back().u, -th * p) / (th * p);
    }
    // interior cells between consecutive distinct breakpoints
    std::size_t i = 0;
    KahanSum pacc;  // saturated mass, grows as u passes breakpoints
    KahanSum qacc;  // linear mass, shrinks
    for (const auto& m : modes) qacc += m.wq1;
    while (i < modes.size()) {
        std::size_t k = i;
        while (k < modes.size() && modes[k].u == modes[i].u) {
            pacc += modes[k].wq0;
            qacc += -modes[k].wq1;
            ++k;
        }
        if (k >= modes.size()) break;
        const double ua = modes[i].u, ub = modes[k].u;
        const double pmass = pacc.value();
        const double qmass = std::max(qacc.value(), 0.0);
        auto cell = [&](double xi_log) {
            const double u = std::exp(xi_log);
            const double kq = pmass + qmass * std::pow(u, q);
            return std::pow(u, -th * p) * std::pow(kq, p / q);
        };
        total += gl_adaptive(cell, std::log(ua), std::log(ub), 16, spec.tail_tol,
                             std::abs(total.value()));
        i = k;
    }
    const double out = total.value();
    if (!(out >= 0.0) || !std::isfinite(out))
        throw TailNotGeometric("interp_norm: integral failed to close");
    return std::pow(out, 1.0 / p);
}

// ---------------------------------------------------------------------------
// Check operations. Each returns data; assertions live in the test suites.
// ---------------------------------------------------------------------------

struct CheckRow {
    double param = 0.0;       // theta, s, or another sweep variable
    double value = 0.0;       // the measured quantity
    double reference = 0.0;   // the comparison quantity
    double ratio = 0.0;
};

// Rows of (theta, normalized norm); the normalized values approach
// sup K/u as theta -> 1 and sup K as theta -> 0.
inline std::vector<CheckRow> limit_recovery_check(const Seq& xi, const PairParams& pp, double p,
                                                  const std::vector<double>& thetas,
                                                  const IntegralSpec& spec = {}) {
    std::vector<CheckRow> rows;
    rows.reserve(thetas.size());
    for (double th : thetas) {
        const double v = norm_factor(th, p) * interp_norm(xi, pp, {th, p}, spec);
        const double ref = (th > 0.5) ? sup_k_over_u(xi, pp) : sup_k(xi, pp);
        rows.push_back({th, v, ref, ref > 0.0 ? v / ref : 0.0});
    }
    return rows;
}

// R(theta) = interp_norm / ||xi||_{l_p^{s(theta)}} together with the
// two-sided envelope values of the equivalence.
struct EnvelopeRow {
    double theta;
    double ratio;
    double env_lo;  // theta^{-1/max{p,q}} + (1-theta)^{-1/max{p,q}}
    double env_hi;  // same with min{p,q}
};

inline std::vector<EnvelopeRow> lemma4_envelope_check(const Seq& xi, const PairParams& pp, double p,
                                                      const std::vector<double>& thetas,
                                                      const IntegralSpec& spec = {}) {
    std::vector<EnvelopeRow> rows;
    const double emax = 1.0 / std::max(p, pp.q), emin = 1.0 / std::min(p, pp.q);
    for (double th : thetas) {
        const double s = (1.0 - th) * pp.s0 + th * pp.s1;
        const double r = interp_norm(xi, pp, {th, p}, spec) / wlq_norm(xi, s, p);
        rows.push_back({th, r, std::pow(th, -emax) + std::pow(1.0 - th, -emax),
                        std::pow(th, -emin) + std::pow(1.0 - th, -emin)});
    }
    return rows;
}

// c_{theta,r} ||xi||_{theta,r} <= c_{theta,q} ||xi||_{theta,q} for q <= r.
inline bool normalized_monotonicity_check(const Seq& xi, const PairParams& pp, double theta,
                                          double q, double r, const IntegralSpec& spec = {},
                                          double slack = 1e-9) {
    if (!(q <= r)) throw UsageError("normalized_monotonicity_check: need q <= r");
    const double vq = norm_factor(theta, q) * interp_norm(xi, pp, {theta, q}, spec);
    const double vr = norm_factor(theta, r) * interp_norm(xi, pp, {theta, r}, spec);
    return vr <= vq * (1.0 + slack) + slack;
}

// ||xi||_{theta,p}^p <= ||xi||_{A0}^p/(theta p) + ||xi||_{A1}^p/((1-theta) p),
// the exact constants produced by K <= min(||.||_{A0}, u ||.||_{A1}).
inline bool coarse_bound_check(const Seq& xi, const PairParams& pp, const InterpParams& ip,
                               const IntegralSpec& spec = {}, double slack = 1e-9) {
    const double lhs = std::pow(interp_norm(xi, pp, ip, spec), ip.p);
    const double rhs = std::pow(wlq_norm(xi, pp.s0, pp.q), ip.p) / (ip.theta * ip.p) +
                       std::pow(wlq_norm(xi, pp.s1, pp.q), ip.p) / ((1.0 - ip.theta) * ip.p);
    return lhs <= rhs * (1.0 + slack) + slack;
}

// Sequence-level two-sided comparison of ||xi||_{(l2, l2^t)_{s/t, p}} against
// the weighted l_p^s norm with the min/max{p,2} envelopes.
struct ComparisonRow {
    double s;
    double lower_ratio;  // V / (env_max * W): bounded below by a constant
    double upper_ratio;  // V / (env_min * W): bounded above by a constant
};

inline ComparisonRow appendix_b_comparison_check(const Seq& xi, double t, double s, double p,
                                                 const IntegralSpec& spec = {}) {
    if (!(0.0 < s && s < t)) throw UsageError("appendix_b_comparison_check: need 0 < s < t");
    const double v = interp_norm(xi, {0.0, t, 2.0}, {s / t, p}, spec);
    const double w = wlq_norm(xi, s, p);
    const double emax = 1.0 / std::max(p, 2.0), emin = 1.0 / std::min(p, 2.0);
    const double env_lo = std::pow(s, -emax) + std::pow(t - s, -emax);
    const double env_hi = std::pow(s, -emin) + std::pow(t - s, -emin);
    return {s, v / (env_lo * w), v / (env_hi * w)};
}

// (rbar(t-rbar))^{1/2} ||xi||_{rbar/t,2} <= C (s(t-s))^{1/p} ||xi||_{s/t,p}
// with rbar = t - Lambda(t-s) near s -> t, rbar = s/Lambda near s -> 0.
inline double theorem343_seq_ratio(const Seq& xi, double t, double s, double p, double lambda,
                                   const IntegralSpec& spec = {}) {
    if (!(lambda > 1.0)) throw RegimeViolation("theorem343_seq_ratio: need Lambda > 1");
    double rbar;
    if (t - s <= t / (2.0 * lambda)) {
        rbar = t - lambda * (t - s);
    } else if (s < 1.0 / (2.0 * lambda)) {
        rbar = s / lambda;
    } else {
        throw RegimeViolation("theorem343_seq_ratio: outside both Lambda regimes");
    }
    const double lhs = std::pow(s * (t - s), 1.0 / p) * interp_norm(xi, {0.0, t, 2.0}, {s / t, p}, spec);
    const double rhs =
        std::pow(rbar * (t - rbar), 0.5) * interp_norm(xi, {0.0, t, 2.0}, {rbar / t, 2.0}, spec);
    return rhs / lhs;
}

inline bool theorem343_seq_check(const Seq& xi, double t, double s, double p, double lambda,
                                 double frozen_c, const IntegralSpec& spec = {}) {
    return theorem343_seq_ratio(xi, t, s, p, lambda, spec) <= frozen_c;
}

// ---------------------------------------------------------------------------
// Sharp reiteration, part (i): the outer K-functional of the pair of inner
// interpolation spaces has no closed form, so it is found by a decomposition
// search: the optimum splits each coordinate inside [0, xi_j] (both inner
// norms are absolute and monotone), and the objective is convex, so cyclic
// per-coordinate golden-section refinement converges.
// ---------------------------------------------------------------------------
struct ReiterationRow {
    double theta;
    double ratio;    // outer norm / base (A0,A1)_{s,p} norm
    double env_lo;   // (theta(1-theta))^{-1/max{p,q}}
    double env_hi;   // (theta(1-theta))^{-1/min{p,q}}
};

inline ReiterationRow reiteration_check(const Seq& xi, double s0, double s1, double theta, double p,
                                        double q, const IntegralSpec& spec = {}) {
    if (xi.support_size() > 5) throw SupportTooLarge("reiteration_check: support must be <= 5");
    const PairParams base{0.0, 1.0, q};
    auto inner0 = [&](const Seq& e) { return interp_norm(e, base, {s0, q}, spec); };
    auto inner1 = [&](const Seq& e) { return interp_norm(e, base, {s1, q}, spec); };

    // plain outer K by per-coordinate golden-section coordinate descent
    auto outer_k = [&](double u) {
        std::vector<double> box(xi.values.size());
        for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::abs(xi.values[i]);
        std::vector<double> x0(box.size(), 0.0);
        for (std::size_t i = 0; i < box.size(); ++i) x0[i] = 0.5 * box[i];
        auto objective = [&]() {
            Seq a{xi.j_min, x0};
            Seq b{xi.j_min, {}};
            b.values.resize(box.size());
            for (std::size_t i = 0; i < box.size(); ++i) b.values[i] = box[i] - x0[i];
            return inner0(a) + u * inner1(b);
        };
        double best = objective();
        const double gr = 0.6180339887498949;
        for (int sweep = 0; sweep < 6; ++sweep) {
            for (std::size_t i = 0; i < box.size(); ++i) {
                if (box[i] == 0.0) continue;
                double lo = 0.0, hi = box[i];
                for (int it = 0; it < 40; ++it) {
                    const double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
                    x0[i] = x1;
                    const double f1 = objective();
                    x0[i] = x2;
                    const double f2 = objective();
                    if (f1 < f2)
                        hi = x2;
                    else
                        lo = x1;
                }
                x0[i] = 0.5 * (lo + hi);
                best = std::min(best, objective());
            }
        }
        return best;
    };

    // outer interpolation norm on a geometric u-grid with saturation tails
    const double n0 = inner0(xi), n1 = inner1(xi);
    const double u_mid = n0 / n1;
    const int span = spec.l_span;
    const int cells_per_unit = 8;
    KahanSum acc;
    double k_lo = 0.0, k_hi = 0.0;
    for (int i = -span * cells_per_unit; i < span * cells_per_unit; ++i) {
        const double xi_log = std::log(u_mid) + (i + 0.5) * std::log(2.0) / cells_per_unit;
        const double u = std::exp(xi_log);
        const double k = outer_k(u);
        if (i == -span * cells_per_unit) k_lo = k / u;
        k_hi = k;
        acc += std::pow(std::exp(-theta * xi_log) * k, p) * std::log(2.0) / cells_per_unit;
    }
    const double u_lo = u_mid * std::exp2(-span), u_hi = u_mid * std::exp2(span);
    acc += std::pow(k_lo, p) * std::pow(u_lo, (1.0 - theta) * p) / ((1.0 - theta) * p);
    acc += std::pow(k_hi, p) * std::pow(u_hi, -theta * p) / (theta * p);
    const double outer = std::pow(acc.value(), 1.0 / p);

    const double s_mix = (1.0 - theta) * s0 + theta * s1;
    const double denom = interp_norm(xi, base, {s_mix, p}, spec);
    const double tt = theta * (1.0 - theta);
    return {theta, outer / denom, std::pow(tt, -1.0 / std::max(p, q)),
            std::pow(tt, -1.0 / std::min(p, q))};
}

}  // namespace fraclab
