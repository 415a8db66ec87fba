#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fraclab/errors.hpp"
#include "fraclab/norms.hpp"
#include "fraclab/trigpoly.hpp"

namespace fraclab {

// Grammar:  cos:<nu>,<amp>[;cos:<nu>,<amp>]*   or   counterexample:<t0>,<p>,<N>
struct FuncSpec {
    enum class Kind { CosineList, Counterexample };
    Kind kind = Kind::CosineList;
    std::vector<std::pair<int, double>> cosines;
    double t0 = 0.0;
    double p = 0.0;
    std::int64_t n = 0;

    TrigPoly realize() const {
        if (kind == Kind::CosineList) return TrigPoly::from_cosines(cosines);
        return counterexample_coeffs(t0, p, static_cast<std::size_t>(n)).realize();
    }

    MonotoneCoeffs coeffs() const {
        if (kind != Kind::Counterexample)
            throw UsageError("FuncSpec: coefficient view only exists for counterexample specs");
        return counterexample_coeffs(t0, p, static_cast<std::size_t>(n));
    }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline double parse_num(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw UsageError("");
        return v;
    } catch (...) {
        throw UsageError(std::string("bad ") + what + ": '" + s + "'");
    }
}

}  // namespace detail

inline FuncSpec parse_func_spec(const std::string& text) {
    FuncSpec spec;
    if (text.rfind("counterexample:", 0) == 0) {
        const auto parts = detail::split(text.substr(15), ',');
        if (parts.size() != 3) throw UsageError("counterexample spec wants t0,p,N: '" + text + "'");
        spec.kind = FuncSpec::Kind::Counterexample;
        spec.t0 = detail::parse_num(parts[0], "t0");
        spec.p = detail::parse_num(parts[1], "p");
        spec.n = static_cast<std::int64_t>(detail::parse_num(parts[2], "N"));
        if (!(spec.t0 > 0.0 && spec.t0 < 1.0)) throw UsageError("counterexample: t0 in (0,1)");
        if (!(spec.p > 1.0)) throw UsageError("counterexample: p > 1");
        if (spec.n < 1) throw UsageError("counterexample: N >= 1");
        return spec;
    }
    spec.kind = FuncSpec::Kind::CosineList;
    for (const auto& term : detail::split(text, ';')) {
        if (term.rfind("cos:", 0) != 0) throw UsageError("bad func term: '" + term + "'");
        const auto parts = detail::split(term.substr(4), ',');
        if (parts.size() != 2) throw UsageError("cos term wants nu,amp: '" + term + "'");
        const int nu = static_cast<int>(detail::parse_num(parts[0], "nu"));
        spec.cosines.emplace_back(nu, detail::parse_num(parts[1], "amp"));
    }
    if (spec.cosines.empty()) throw UsageError("empty func spec");
    return spec;
}

// s-grid grammar: geometric:<a>:<b>:<n> (geometric from a to b) or
// approach:<limit>:<delta0>:<n> (limit - delta0*2^-m, m = 0..n-1).
inline std::vector<double> parse_s_grid(const std::string& text) {
    const auto parts = detail::split(text, ':');
    if (parts.size() != 4) throw UsageError("s-grid wants kind:<a>:<b>:<n>: '" + text + "'");
    const double a = detail::parse_num(parts[1], "grid a");
    const double b = detail::parse_num(parts[2], "grid b");
    const int n = static_cast<int>(detail::parse_num(parts[3], "grid n"));
    if (n < 1) throw UsageError("s-grid: n >= 1");
    std::vector<double> out;
    out.reserve(n);
    if (parts[0] == "geometric") {
        if (!(a > 0.0 && b > 0.0)) throw UsageError("geometric grid wants positive endpoints");
        for (int i = 0; i < n; ++i)
            out.push_back(n == 1 ? a : a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
        return out;
    }
    if (parts[0] == "approach") {
        for (int m = 0; m < n; ++m) out.push_back(a - b * std::pow(2.0, -m));
        return out;
    }
    throw UsageError("unknown s-grid kind: '" + parts[0] + "'");
}

}  // namespace fraclab
