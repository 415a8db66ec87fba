#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace fraclab {

struct GlRule {
    std::vector<double> x;  // nodes on [-1,1]
    std::vector<double> w;
};

// Newton iteration on Legendre polynomials, nodes to machine precision.
inline GlRule make_gauss_legendre(int n) {
    GlRule r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[n - 1 - i] = r.w[i];
    }
    return r;
}

inline const GlRule& gauss_legendre(int n) {
    static std::map<int, GlRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

// Integrate f over [a,b] with an n-node rule.
template <class F>
double gl_integrate(F&& f, double a, double b, int n) {
    const GlRule& r = gauss_legendre(n);
    const double c = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0, cor = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = r.w[i] * f(c + half * r.x[i]);
        const double y = v - cor;
        const double t = acc + y;
        cor = (t - acc) - y;
        acc = t;
    }
    return acc * half;
}

// Adaptive bisection around a fixed-order rule; tol is relative to `scale`
// (pass a running total there when the integral is a sum of many cells).
template <class F>
double gl_adaptive(F&& f, double a, double b, int n, double tol, double scale, int depth = 0) {
    const double whole = gl_integrate(f, a, b, n);
    const double mid = 0.5 * (a + b);
    const double parts = gl_integrate(f, a, mid, n) + gl_integrate(f, mid, b, n);
    const double ref = std::max(scale, std::abs(parts));
    if (std::abs(whole - parts) <= tol * ref || depth >= 30) return parts;
    return gl_adaptive(f, a, mid, n, tol, scale, depth + 1) +
           gl_adaptive(f, mid, b, n, tol, scale, depth + 1);
}

}  // namespace fraclab
