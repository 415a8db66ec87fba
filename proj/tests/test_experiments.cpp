#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fraclab/experiments.hpp"
#include "fraclab/fit.hpp"
#include "fraclab/suites.hpp"

using namespace fraclab;

namespace {

std::vector<double> approach_grid(double limit, double d0, int n) {
    std::vector<double> g;
    for (int m = 0; m < n; ++m) g.push_back(limit - d0 * std::pow(2.0, -m));
    return g;
}

}  // namespace

TEST_CASE("bbm sweep: constant input flags degenerate") {
    const auto rep = bbm_sweep(TrigPoly::constant(2.0), 0.7, 2.0, {0.2, 0.4}, {});
    CHECK(rep.degenerate);
    for (const auto& r : rep.rows) {
        CHECK(r.normalized == 0.0);
        CHECK(r.ratio == 0.0);
    }
    CHECK(rep.all_finite());
}

TEST_CASE("bbm sweep grid vs spectral path at p=2") {
    const TrigPoly f = TrigPoly::from_cosines({{1, 1.0}, {3, 0.25}});
    const auto grid = approach_grid(0.6, 0.3, 5);
    const auto a = bbm_sweep(f, 0.6, 2.0, grid, {}, SweepPath::Grid);
    const auto b = bbm_sweep(f, 0.6, 2.0, grid, {}, SweepPath::SpectralP2);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        CHECK(a.rows[i].ratio == Catch::Approx(b.rows[i].ratio).epsilon(0.01));
}

TEST_CASE("classical regime: t = 1 ratios converge into a tight band") {
    const TrigPoly f = TrigPoly::from_cosines({{1, 1.0}});
    std::vector<double> grid;
    for (int m = 0; m < 7; ++m) grid.push_back(1.0 - 0.3 * std::pow(2.0, -m));
    const auto rep = bbm_sweep(f, 1.0, 2.0, grid, {}, SweepPath::Grid);
    double prev = 0.0;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(rep.rows[i].ratio > 0.1);
        CHECK(rep.rows[i].ratio < 10.0);
        if (i + 2 == rep.rows.size()) prev = rep.rows[i].ratio;
    }
    const double last = rep.rows.back().ratio;
    CHECK(std::abs(last - prev) / last < 0.05);  // Cauchy trend at the deep end
}

TEST_CASE("ms sweep converges for mean-zero and non-mean-zero inputs") {
    for (bool with_mean : {false, true}) {
        TrigPoly f = TrigPoly::from_cosines({{1, 1.0}});
        if (with_mean) f = f + TrigPoly::constant(0.5);
        std::vector<double> grid;
        for (int m = 0; m < 8; ++m) grid.push_back(0.3 * std::pow(2.0, -m));
        const auto rep = ms_sweep(f, 0.7, 2.0, grid, {}, SweepPath::SpectralP2);
        REQUIRE(rep.rows.size() == 8);
        // Cauchy trend of the ratios toward the small-s end of the grid
        const double last = rep.rows[0].ratio, prev = rep.rows[1].ratio;
        CHECK(std::abs(last - prev) / last < 0.05);
        CHECK(rep.all_finite());
    }
}

TEST_CASE("blowup sweep: ratios are scale-invariant and exponents fit") {
    const TrigPoly f = TrigPoly::from_cosines({{1, 1.0}, {3, 0.25}});
    std::vector<double> grid = approach_grid(0.7, 0.25, 6);
    const auto a = blowup_sweep(f, 0.7, 2.0, grid, {}, SweepPath::SpectralP2);
    const auto b = blowup_sweep(f.scaled(5.0), 0.7, 2.0, grid, {}, SweepPath::SpectralP2);
    std::vector<double> deltas, ratios;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].ratio == Catch::Approx(b.rows[i].ratio).epsilon(1e-9));
        deltas.push_back(0.7 - a.rows[i].param);
        ratios.push_back(a.rows[i].ratio);
    }
    const double slope = fit_loglog(deltas, ratios).slope;
    CHECK(slope == Catch::Approx(-0.5).margin(0.1));
}

TEST_CASE("counterexample families: boundedness, divergence rate, proxies") {
    std::vector<double> grid;
    for (int m = 0; m < 8; ++m) grid.push_back(0.5 - 0.3 * std::pow(2.0, -m));
    const auto reps = counterexample_sweep(0.5, 2.0, 1 << 14, grid);
    REQUIRE(reps.size() == 3);
    const auto& ga = reps[0];
    const auto& bu = reps[1];
    const auto& hl = reps[2];
    double lo = HUGE_VAL, hi = 0.0;
    for (const auto& r : ga.rows) {
        lo = std::min(lo, r.normalized);
        hi = std::max(hi, r.normalized);
    }
    CHECK(hi / lo < 3.0);
    std::vector<double> deltas, values;
    for (const auto& r : bu.rows) {
        deltas.push_back(0.5 - r.param);
        values.push_back(r.normalized);
    }
    const double slope = fit_loglog(deltas, values).slope;
    CHECK(slope == Catch::Approx(-0.5).margin(0.15));
    // membership proxies: log S vs log log N linear with high R^2
    std::vector<double> x, y;
    for (const auto& r : hl.rows) {
        x.push_back(std::log(r.param * std::log(2.0)));
        y.push_back(std::log(r.normalized));
    }
    CHECK(fit_line(x, y).r2 > 0.99);
    for (const auto& rep : reps) CHECK(rep.all_finite());
}

TEST_CASE("counterexample grid validation") {
    CHECK_THROWS_AS(counterexample_sweep(0.5, 2.0, 1024, {}), UsageError);
    CHECK_THROWS_AS(counterexample_sweep(0.5, 2.0, 1024, {0.7}), UsageError);
}

TEST_CASE("sobolev check: s = t rows sit at ratio 1") {
    const TrigPoly f = TrigPoly::from_cosines({{1, 1.0}});
    const auto rep = sobolev_ineq_check({f}, 1.0, 2.0, {{0.4, 0.400001}}, {});
    CHECK(rep.rows[0].ratio == Catch::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("counterexample truncations stay bounded in the lower norms") {
    // the truncated series is smooth, so the shifted-smoothness bound holds
    // with the same frozen constant even as the truncation grows
    for (int k : {8, 11}) {
        const TrigPoly f = counterexample_coeffs(0.5, 2.0, 1u << k).realize();
        const auto reps = theorem343_p2_check({f}, 0.45, {0.4}, 2.0);
        for (const auto& rep : reps)
            for (const auto& r : rep.rows) CHECK(r.ratio < FrozenConstants::aux6_c);
    }
}

TEST_CASE("tl and t343 checks behave on simple inputs") {
    const TrigPoly f = TrigPoly::from_cosines({{1, 1.0}, {2, 0.5}});
    const auto tl = sharp_tl_check_p2({f}, 0.0, 1.0, {0.25, 0.5, 0.75});
    REQUIRE(tl.size() == 2);
    for (const auto& r : tl[0].rows) CHECK(r.ratio < FrozenConstants::tl_rst_c);
    const auto t343 = theorem343_p2_check({f}, 0.8, {0.75}, 2.0);
    REQUIRE(t343.size() == 3);
    for (const auto& rep : t343)
        for (const auto& r : rep.rows) CHECK(r.ratio < FrozenConstants::aux6_c);
    CHECK_THROWS_AS(theorem343_p2_check({f}, 0.8, {0.4}, 2.0), RegimeViolation);
    CHECK_THROWS_AS(sharp_tl_check_p2({f}, 0.0, 1.0, {1.5}), UsageError);
}

TEST_CASE("limiting-form checks stay bounded at their endpoints") {
    const TrigPoly f = TrigPoly::from_cosines({{1, 1.0}, {4, 0.3}});
    // r = 0 form, s pushed toward 0 where the interior form would blow up
    const auto wld = wld_check_p2({f}, 0.8, {0.002, 0.01, 0.1, 0.5, 0.75});
    for (const auto& r : wld.rows) CHECK(r.ratio < FrozenConstants::tl_wld_c);
    // t = 1 form, s pushed toward 1
    const auto wld2 = wld2_check_p2({f}, 0.2, {0.25, 0.6, 0.9, 0.995});
    for (const auto& r : wld2.rows) CHECK(r.ratio < FrozenConstants::tl_wld2_c);
    CHECK_THROWS_AS(wld_check_p2({f}, 0.8, {0.9}), UsageError);
    CHECK_THROWS_AS(wld2_check_p2({f}, 0.2, {0.1}), UsageError);
}

TEST_CASE("suite runners report no violations on fresh seeds") {
    CHECK(run_sobolev_suite(991, 25).violations == 0);
    CHECK(run_tl_suite(992, 25).violations == 0);
    CHECK(run_t343_suite(993, 25).violations == 0);
    CHECK(run_seq_suite(994, 25).violations == 0);
}

TEST_CASE("golden capture of a seeded sweep") {
    const TrigPoly f = TrigPoly::from_cosines({{1, 1.0}});
    const auto rep = bbm_sweep(f, 0.5, 2.0, {0.1, 0.2, 0.4}, {}, SweepPath::Grid, 1, 9);
    CHECK(to_csv(rep) ==
          "experiment,p,t,param,raw,normalized,reference,ratio\n"
          "bbm-sweep,2,0.5,0.10000000000000001,7.0450685798107529,4.4556925968579426,"
          "1.7724538509055159,2.5138553506381034\n"
          "bbm-sweep,2,0.5,0.20000000000000001,5.6499974756201308,3.0946310672443902,"
          "1.7724538509055159,1.7459586130625613\n"
          "bbm-sweep,2,0.5,0.40000000000000002,6.5067273160665158,2.0576078432404499,"
          "1.7724538509055159,1.1608809121824266\n");
}

TEST_CASE("deterministic rows regardless of worker count") {
    const TrigPoly f = TrigPoly::from_cosines({{1, 1.0}, {3, 0.25}});
    const auto grid = approach_grid(0.6, 0.3, 6);
    const auto a = bbm_sweep(f, 0.6, 2.0, grid, {}, SweepPath::Grid, 1);
    const auto b = bbm_sweep(f, 0.6, 2.0, grid, {}, SweepPath::Grid, 8);
    CHECK(to_csv(a) == to_csv(b));
}
