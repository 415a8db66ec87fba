#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <utility>
#include <vector>

#include "fraclab/kahan.hpp"

namespace fraclab {

using cplx = std::complex<double>;

// Real-valued trigonometric polynomial on the torus, stored as complex
// amplitudes c_nu for nu in [-N, N] with c_{-nu} = conj(c_nu).
class TrigPoly {
  public:
    TrigPoly() : degree_(0), c_(1, cplx(0.0, 0.0)) {}
    explicit TrigPoly(int degree) : degree_(degree), c_(2 * degree + 1, cplx(0.0, 0.0)) {}

    static TrigPoly constant(double v) {
        TrigPoly f(0);
        f.set_coeff(0, cplx(v, 0.0));
        return f;
    }

    // f(x) = sum a_nu cos(nu x): stores c_{+-nu} = a_nu/2 (a_0 goes to c_0).
    static TrigPoly from_cosines(const std::vector<std::pair<int, double>>& amps) {
        int deg = 0;
        for (const auto& [nu, a] : amps) {
            (void)a;
            deg = std::max(deg, std::abs(nu));
        }
        TrigPoly f(deg);
        for (const auto& [nu, a] : amps) {
            if (nu == 0) {
                f.c_[f.idx(0)] += cplx(a, 0.0);
            } else {
                f.c_[f.idx(std::abs(nu))] += cplx(0.5 * a, 0.0);
                f.c_[f.idx(-std::abs(nu))] += cplx(0.5 * a, 0.0);
            }
        }
        return f;
    }

    int degree() const { return degree_; }

    cplx coeff(int nu) const {
        if (std::abs(nu) > degree_) return cplx(0.0, 0.0);
        return c_[idx(nu)];
    }

    // Setting mode nu also pins -nu to the conjugate so the poly stays real.
    void set_coeff(int nu, cplx v) {
        c_[idx(nu)] = v;
        if (nu != 0) c_[idx(-nu)] = std::conj(v);
    }

    double mean() const { return coeff(0).real(); }

    double eval(double x) const {
        KahanSum acc(coeff(0).real());
        for (int nu = 1; nu <= degree_; ++nu) {
            const cplx c = c_[idx(nu)];
            // c e^{i nu x} + conj(c) e^{-i nu x} = 2 Re(c e^{i nu x})
            acc += 2.0 * (c.real() * std::cos(nu * x) - c.imag() * std::sin(nu * x));
        }
        return acc.value();
    }

    std::vector<double> eval_grid(int m) const {
        std::vector<double> out(m);
        for (int i = 0; i < m; ++i) out[i] = eval(2.0 * M_PI * i / m);
        return out;
    }

    TrigPoly scaled(double lambda) const {
        TrigPoly g = *this;
        for (auto& v : g.c_) v *= lambda;
        return g;
    }

    TrigPoly operator+(const TrigPoly& o) const {
        TrigPoly g(std::max(degree_, o.degree_));
        for (int nu = -g.degree_; nu <= g.degree_; ++nu) g.c_[g.idx(nu)] = coeff(nu) + o.coeff(nu);
        return g;
    }

    TrigPoly operator-(const TrigPoly& o) const { return *this + o.scaled(-1.0); }

    bool conjugate_symmetric(double tol = 1e-14) const {
        for (int nu = 1; nu <= degree_; ++nu)
            if (std::abs(coeff(-nu) - std::conj(coeff(nu))) > tol) return false;
        return std::abs(coeff(0).imag()) <= tol;
    }

    // sum_{nu != 0} |c_nu| |nu|^w  (bounds the sup norm of fractional derivatives)
    double abs_coeff_weighted_sum(double w) const {
        KahanSum acc;
        for (int nu = 1; nu <= degree_; ++nu)
            acc += 2.0 * std::abs(c_[idx(nu)]) * std::pow(static_cast<double>(nu), w);
        return acc.value();
    }

    // sum_{nu != 0} |c_nu|^2 |nu|^{2r}, the Parseval workhorse
    double coeff_sq_weighted_sum(double two_r) const {
        KahanSum acc;
        for (int nu = 1; nu <= degree_; ++nu)
            acc += 2.0 * std::norm(c_[idx(nu)]) * std::pow(static_cast<double>(nu), two_r);
        return acc.value();
    }

  private:
    int idx(int nu) const { return nu + degree_; }

    int degree_;
    std::vector<cplx> c_;
};

}  // namespace fraclab
