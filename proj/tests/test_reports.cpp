#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fraclab/funcspec.hpp"
#include "fraclab/report.hpp"

using namespace fraclab;

namespace {

SweepReport sample_report() {
    SweepReport rep;
    rep.experiment = "bbm-sweep";
    rep.p = 2.0;
    rep.t = 0.6;
    rep.n = 0;
    rep.quad = "M=0,L=60,G=16";
    rep.seed = 7;
    rep.rows = {{0.3, 1.25, 0.5, 0.75, 0.66666666666666663},
                {0.45, 2.5, 1.0, 0.75, 1.3333333333333333}};
    return rep;
}

}  // namespace

TEST_CASE("csv layout is bit-exact") {
    SweepReport rep = sample_report();
    const std::string csv = to_csv(rep);
    CHECK(csv.rfind("experiment,p,t,param,raw,normalized,reference,ratio\n", 0) == 0);
    CHECK(csv.find("bbm-sweep,2,0.59999999999999998,0.29999999999999999,1.25,0.5,0.75,"
                   "0.66666666666666663\n") != std::string::npos);
    CHECK(csv.back() == '\n');
    CHECK(csv.find('\r') == std::string::npos);
    // empty report: header only
    rep.rows.clear();
    CHECK(to_csv(rep) == "experiment,p,t,param,raw,normalized,reference,ratio\n");
}

TEST_CASE("json round-trips to an equal report") {
    const SweepReport rep = sample_report();
    const SweepReport back = report_from_json(to_json(rep));
    CHECK(back == rep);
}

TEST_CASE("emit writes files with path context on failure") {
    const SweepReport rep = sample_report();
    const std::string path = "test_report_tmp.json";
    emit(rep, "json", path);
    const SweepReport back = load_report(path);
    CHECK(back == rep);
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit(rep, "yaml", "x"), UsageError);
    CHECK_THROWS(emit(rep, "csv", "/nonexistent-dir-zzz/x.csv"));
}

TEST_CASE("gnuplot emission carries the data inline") {
    const std::string gp = to_gnuplot(sample_report());
    CHECK(gp.find("$data << EOD") != std::string::npos);
    CHECK(gp.find("plot $data") != std::string::npos);
}

TEST_CASE("func spec grammar") {
    const FuncSpec a = parse_func_spec("cos:1,1;cos:3,0.25");
    CHECK(a.kind == FuncSpec::Kind::CosineList);
    REQUIRE(a.cosines.size() == 2);
    CHECK(a.cosines[1].first == 3);
    const TrigPoly f = a.realize();
    CHECK(f.eval(0.0) == Catch::Approx(1.25));

    const FuncSpec b = parse_func_spec("counterexample:0.5,2,1024");
    CHECK(b.kind == FuncSpec::Kind::Counterexample);
    CHECK(b.coeffs().monotone());
    CHECK(b.coeffs().c.size() == 1024);

    CHECK_THROWS_AS(parse_func_spec("sin:1,1"), UsageError);
    CHECK_THROWS_AS(parse_func_spec("counterexample:0.5,2"), UsageError);
    CHECK_THROWS_AS(parse_func_spec("cos:1"), UsageError);
    CHECK_THROWS_AS(parse_func_spec(""), UsageError);
}

TEST_CASE("s-grid grammar") {
    const auto g = parse_s_grid("geometric:0.1:0.4:3");
    REQUIRE(g.size() == 3);
    CHECK(g[0] == Catch::Approx(0.1));
    CHECK(g[1] == Catch::Approx(0.2));
    CHECK(g[2] == Catch::Approx(0.4));
    const auto a = parse_s_grid("approach:0.6:0.3:3");
    CHECK(a[0] == Catch::Approx(0.3));
    CHECK(a[2] == Catch::Approx(0.525));
    CHECK_THROWS_AS(parse_s_grid("linear:0:1:4"), UsageError);
    CHECK_THROWS_AS(parse_s_grid("geometric:0:1"), UsageError);
}
