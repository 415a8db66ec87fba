#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fraclab/errors.hpp"
#include "fraclab/fracdiff.hpp"
#include "fraclab/gauss_legendre.hpp"
#include "fraclab/kahan.hpp"
#include "fraclab/spectral.hpp"
#include "fraclab/special.hpp"
#include "fraclab/trigpoly.hpp"

namespace fraclab {

struct SmoothnessTriple {
    double s;
    double t;
    double p;
};

struct QuadratureSpec {
    int M = 0;     // torus grid points; 0 = auto (8*degree + 9)
    int L = 60;    // cap on dyadic h-shells
    int G = 16;    // Gauss-Legendre nodes per shell
    double shell_tail_tol = 1e-9;

    int resolve_m(const TrigPoly& f) const { return M > 0 ? M : 8 * f.degree() + 9; }

    std::string describe() const {
        return "M=" + std::to_string(M) + ",L=" + std::to_string(L) + ",G=" + std::to_string(G);
    }
};

// Rectangle rule on the uniform M-point torus grid; plain dx measure on [0,2pi).
inline double lp_norm(const TrigPoly& f, double p, const QuadratureSpec& spec = {}) {
    const int m = spec.resolve_m(f);
    if (m < 4 * f.degree() + 1)
        throw GridTooCoarse("lp_norm: M=" + std::to_string(m) + " below 4*degree+1 for degree " +
                            std::to_string(f.degree()));
    KahanSum acc;
    for (int i = 0; i < m; ++i) acc += std::pow(std::abs(f.eval(2.0 * M_PI * i / m)), p);
    return std::pow(acc.value() * 2.0 * M_PI / m, 1.0 / p);
}

// Fourier multiplier |nu|^r; the zero mode is annihilated.
inline TrigPoly frac_laplacian(const TrigPoly& f, double r) {
    TrigPoly g(f.degree());
    for (int nu = 1; nu <= f.degree(); ++nu)
        g.set_coeff(nu, f.coeff(nu) * std::pow(static_cast<double>(nu), r));
    g.set_coeff(0, cplx(0.0, 0.0));
    return g;
}

// ---------------------------------------------------------------------------
// Dyadic-shell integration of  2 int_0^inf W(h) |h|^{-1-sp} dh  where
// W(h) = || Delta-type difference of f at step h ||_p^p is 2pi-periodic in h
// (a 2pi step of h shifts the difference by a translation). Callers supply
// the normalized slice Wtil(h) = W(h)/h^{tp}, which tends to a constant as
// h -> 0, so the sub-shell remainder closes in exact form once Wtil settles.
// The part over h > pi folds onto (0, pi] with the window weight T_lambda.
// ---------------------------------------------------------------------------
inline double shell_seminorm_p(const std::function<double(double)>& wtil, double s, double t,
                               double p, const QuadratureSpec& spec, int min_shells = 12) {
    if (spec.L < 1 || spec.G < 2) throw UsageError("quadrature spec wants L >= 1 and G >= 2");
    const double dp = (t - s) * p;   // near-weight exponent on h
    const double tp1 = t * p + 1.0;  // far-weight exponent in log variable
    const double lambda = 1.0 + s * p;
    const GlRule& rule = gauss_legendre(spec.G);
    KahanSum near, far;
    double w_prev = -1.0;
    double h_bound = M_PI;
    bool settled = false;
    int l = 0;
    for (; l < spec.L; ++l) {
        const double xi_hi = std::log(M_PI) - l * std::log(2.0);
        const double xi_lo = xi_hi - std::log(2.0);
        const double c = 0.5 * (xi_hi + xi_lo), half = 0.5 * (xi_hi - xi_lo);
        KahanSum near_l, far_l;
        for (int i = 0; i < spec.G; ++i) {
            const double xi = c + half * rule.x[i];
            const double h = std::exp(xi);
            const double w = wtil(h);
            near_l += rule.w[i] * w * std::exp(dp * xi);
            if (l < 44) far_l += rule.w[i] * w * std::exp(tp1 * xi) * window_weight(lambda, h);
        }
        near += near_l.value() * half;
        far += far_l.value() * half;
        h_bound *= 0.5;
        const double w_here = wtil(h_bound);
        if (l + 1 >= min_shells && w_prev >= 0.0 &&
            std::abs(w_here - w_prev) <= spec.shell_tail_tol * std::max(w_here, 1e-300)) {
            settled = true;
            // exact remainders with the settled constant slice
            near += w_here * std::pow(h_bound, dp) / dp;
            far += w_here * window_weight(lambda, 0.0) * std::pow(h_bound, tp1) / tp1;
            break;
        }
        w_prev = w_here;
    }
    if (!settled)
        throw ShellTailNotConverged("shell_seminorm_p: slice not settled after L=" +
                                    std::to_string(spec.L) + " shells (tol " +
                                    std::to_string(spec.shell_tail_tol) + ")");
    return 2.0 * (near.value() + far.value());
}

namespace detail {

// || g ||_p^p / h^{tp} by the M-point rectangle rule, where g's positive-mode
// coefficients are c_nu * mult(nu) and mult already carries the h^{-t} scale.
inline double grid_slice_p(const TrigPoly& f, double p, int m,
                           const std::function<cplx(int)>& mult) {
    const int deg = f.degree();
    std::vector<cplx> gc(deg + 1);
    for (int nu = 1; nu <= deg; ++nu) gc[nu] = f.coeff(nu) * mult(nu);
    KahanSum acc;
    for (int i = 0; i < m; ++i) {
        const double x = 2.0 * M_PI * i / m;
        KahanSum val;
        for (int nu = 1; nu <= deg; ++nu)
            val += 2.0 * (gc[nu].real() * std::cos(nu * x) - gc[nu].imag() * std::sin(nu * x));
        acc += std::pow(std::abs(val.value()), p);
    }
    return acc.value() * 2.0 * M_PI / m;
}

}  // namespace detail

// Grid-quadrature Butzer seminorm (the direct route; the p=2 Parseval route
// in spectral.hpp is its independent oracle).
inline double butzer_seminorm(const TrigPoly& f, const SmoothnessTriple& par,
                              const QuadratureSpec& spec = {}) {
    if (!(0.0 < par.s && par.s < par.t)) throw UsageError("butzer_seminorm: need 0 < s < t");
    if (!(par.p > 1.0)) throw UsageError("butzer_seminorm: need p > 1");
    const int m = spec.resolve_m(f);
    if (m < 4 * f.degree() + 1) throw GridTooCoarse("butzer_seminorm: grid too coarse");
    if (f.degree() == 0) return 0.0;
    const double t = par.t;
    auto wtil = [&](double h) {
        return detail::grid_slice_p(f, par.p, m,
                                    [&](int nu) { return frac_multiplier_normalized(t, nu, h); });
    };
    const int min_shells = std::max(12, static_cast<int>(std::ceil(std::log2(f.degree() + 1))) + 5);
    return std::pow(shell_seminorm_p(wtil, par.s, par.t, par.p, spec, min_shells), 1.0 / par.p);
}

// Gagliardo seminorm: double quadrature with pointwise first differences in
// the inner variable. Same shell scheme with t = 1; the slice switches to the
// exact per-mode rendering of the same difference once h is small enough that
// pointwise subtraction would lose digits.
inline double gagliardo_seminorm(const TrigPoly& f, double s, double p,
                                 const QuadratureSpec& spec = {}) {
    if (!(0.0 < s && s < 1.0)) throw UsageError("gagliardo_seminorm: need 0 < s < 1");
    if (!(p > 1.0)) throw UsageError("gagliardo_seminorm: need p > 1");
    const int m = spec.resolve_m(f);
    if (m < 4 * f.degree() + 1) throw GridTooCoarse("gagliardo_seminorm: grid too coarse");
    if (f.degree() == 0) return 0.0;
    auto wtil = [&](double h) {
        if (h >= 1e-5) {
            KahanSum acc;
            for (int i = 0; i < m; ++i) {
                const double x = 2.0 * M_PI * i / m;
                acc += std::pow(std::abs((f.eval(x + h) - f.eval(x)) / h), p);
            }
            return acc.value() * 2.0 * M_PI / m;
        }
        return detail::grid_slice_p(f, p, m, [&](int nu) {
            const double half = 0.5 * nu * h;
            const cplx rot(std::cos(half), std::sin(half));
            return cplx(0.0, 2.0 * std::sin(half) / h) * rot;  // (e^{i nu h}-1)/h
        });
    };
    const int min_shells = std::max(12, static_cast<int>(std::ceil(std::log2(f.degree() + 1))) + 5);
    return std::pow(shell_seminorm_p(wtil, s, 1.0, p, spec, min_shells), 1.0 / p);
}

// sup_{|h| <= u} ||Delta_h^t f||_p over a Chebyshev-spaced dyadic sample of h.
inline double modulus(const TrigPoly& f, FracOrder order, double u, double p,
                      const QuadratureSpec& spec = {}) {
    if (!(u > 0.0 && u <= M_PI + 1e-12)) throw UsageError("modulus: need 0 < u <= pi");
    // p = 2 goes through Parseval; lp_norm agrees with it to 1e-12 and the
    // exact route keeps large-degree sweeps tractable.
    auto norm_of = [&](double h) {
        const TrigPoly d = apply_frac_difference(f, order, h);
        return p == 2.0 ? l2_norm_exact(d) : lp_norm(d, p, spec);
    };
    const int levels = 12;
    double best = norm_of(u);
    double hi = u;
    for (int k = 0; k < levels; ++k) {
        const double lo = 0.5 * hi;
        for (int i = 0; i < spec.G; ++i) {
            const double h =
                0.5 * (hi + lo) + 0.5 * (hi - lo) * std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * spec.G));
            best = std::max(best, norm_of(h));
        }
        hi = lo;
    }
    return best;
}

// Tabulated K(v), v = u^t, nondecreasing with K/v nonincreasing.
struct KProfile {
    std::vector<double> v;
    std::vector<double> k;
};

inline KProfile k_profile_lp_ht(const TrigPoly& f, double t, double p, const QuadratureSpec& spec,
                                const std::vector<double>& u_grid) {
    KProfile prof;
    prof.v.reserve(u_grid.size());
    prof.k.reserve(u_grid.size());
    for (double u : u_grid) {
        if (u > M_PI) u = M_PI;  // the modulus saturates past pi by periodicity
        prof.v.push_back(std::pow(u, t));
        prof.k.push_back(modulus(f, FracOrder{t}, u, p, spec));
    }
    for (std::size_t i = 1; i < prof.k.size(); ++i)
        prof.k[i] = std::max(prof.k[i], prof.k[i - 1]);  // K nondecreasing
    for (std::size_t i = 1; i < prof.k.size(); ++i)      // K/v nonincreasing
        prof.k[i] = std::min(prof.k[i], prof.k[i - 1] * prof.v[i] / prof.v[i - 1]);
    return prof;
}

// Discretized interpolation-norm integral built from a tabulated profile:
// trapezoid in log u across the table plus closed power tails on both sides.
inline double profile_interp_norm(const KProfile& prof, double s, double t, double p) {
    const std::size_t n = prof.v.size();
    if (n < 2) throw UsageError("profile_interp_norm: need at least 2 points");
    auto u_of = [&](std::size_t i) { return std::pow(prof.v[i], 1.0 / t); };
    auto integrand = [&](std::size_t i) {
        return std::pow(std::pow(u_of(i), -s) * prof.k[i], p);
    };
    KahanSum acc;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dxi = std::log(u_of(i + 1) / u_of(i));
        acc += 0.5 * (integrand(i) + integrand(i + 1)) * dxi;
    }
    // small-u side: K ~ C u^t with C pinned at the first table point
    const double c0 = prof.k[0] / prof.v[0];
    acc += std::pow(c0, p) * std::pow(u_of(0), (t - s) * p) / ((t - s) * p);
    // large-u side: K saturates at the last value
    acc += std::pow(prof.k[n - 1], p) * std::pow(u_of(n - 1), -s * p) / (s * p);
    return std::pow(acc.value(), 1.0 / p);
}

// ---------------------------------------------------------------------------
// Hardy-Littlewood coefficient proxies for monotone cosine series.
// ---------------------------------------------------------------------------
struct MonotoneCoeffs {
    std::vector<double> c;  // c[0] = c_1 >= c_2 >= ... >= 0

    bool monotone() const {
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i] > c[i - 1] || c[i] < 0.0) return false;
        return !c.empty() && c[0] >= 0.0;
    }

    TrigPoly realize() const {
        std::vector<std::pair<int, double>> amps;
        amps.reserve(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) amps.emplace_back(static_cast<int>(i + 1), c[i]);
        return TrigPoly::from_cosines(amps);
    }
};

inline MonotoneCoeffs counterexample_coeffs(double t0, double p, std::size_t n) {
    MonotoneCoeffs mc;
    mc.c.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        mc.c[i] = std::pow(static_cast<double>(i + 1), -t0 - 1.0 + 1.0 / p);
    return mc;
}

inline double hl_lp_proxy(const MonotoneCoeffs& mc, double p) {
    KahanSum acc;
    for (std::size_t i = 0; i < mc.c.size(); ++i)
        acc += std::pow(static_cast<double>(i + 1), p - 2.0) * std::pow(mc.c[i], p);
    return std::pow(acc.value(), 1.0 / p);
}

inline double hl_sobolev_proxy(const MonotoneCoeffs& mc, double t, double p) {
    KahanSum acc;
    for (std::size_t i = 0; i < mc.c.size(); ++i)
        acc += std::pow(static_cast<double>(i + 1), t * p + p - 2.0) * std::pow(mc.c[i], p);
    return std::pow(acc.value(), 1.0 / p);
}

inline double gm_modulus_proxy(const MonotoneCoeffs& mc, double u, double p) {
    KahanSum acc;
    for (std::size_t i = 0; i < mc.c.size(); ++i) {
        const double nu = static_cast<double>(i + 1);
        acc += std::pow(std::min(1.0, nu * u), p) * std::pow(nu, p - 2.0) * std::pow(mc.c[i], p);
    }
    return std::pow(acc.value(), 1.0 / p);
}

}  // namespace fraclab
