// fraclab: batch front-end for the fractional-smoothness laboratory.
// Exit codes: 0 pass, 1 check violation, 2 usage error, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraclab/errors.hpp"
#include "fraclab/experiments.hpp"
#include "fraclab/funcspec.hpp"
#include "fraclab/report.hpp"
#include "fraclab/suites.hpp"
#include "fraclab/version.hpp"

namespace {

using namespace fraclab;

struct CommonOpts {
    double p = 2.0;
    double t = 0.0;
    double alpha = 1.0;
    std::string func = "cos:1,1";
    std::string s_grid;
    std::string quad;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    int jobs = 1;
    std::string path = "grid";
    int cases = 100;
    double lambda = 2.0;
    double r = 0.0;
    std::int64_t n = 16384;
};

QuadratureSpec parse_quad(const std::string& text) {
    QuadratureSpec spec;
    if (text.empty()) return spec;
    for (const auto& item : fraclab::detail::split(text, ',')) {
        const auto kv = fraclab::detail::split(item, '=');
        if (kv.size() != 2) throw UsageError("bad quad item: '" + item + "'");
        const int v = static_cast<int>(fraclab::detail::parse_num(kv[1], "quad value"));
        if (kv[0] == "M")
            spec.M = v;
        else if (kv[0] == "L")
            spec.L = v;
        else if (kv[0] == "G")
            spec.G = v;
        else
            throw UsageError("unknown quad key: '" + kv[0] + "'");
    }
    return spec;
}

SweepPath parse_path(const std::string& text) {
    if (text == "grid") return SweepPath::Grid;
    if (text == "spectral") return SweepPath::SpectralP2;
    throw UsageError("unknown path: '" + text + "' (grid|spectral)");
}

void write_reports(const std::vector<SweepReport>& reps, const CommonOpts& opt) {
    std::string payload;
    if (opt.format == "csv") {
        payload = "experiment,p,t,param,raw,normalized,reference,ratio\n";
        for (const auto& rep : reps) {
            const std::string whole = to_csv(rep);
            payload += whole.substr(whole.find('\n') + 1);
        }
    } else if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reps) arr.push_back(to_json(rep));
        payload = arr.dump(2) + "\n";
    } else if (opt.format == "gnuplot") {
        for (const auto& rep : reps) payload += to_gnuplot(rep);
    } else {
        throw UsageError("unknown format: '" + opt.format + "'");
    }
    if (opt.out.empty()) {
        std::fputs(payload.c_str(), stdout);
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + opt.out + "'");
    f << payload;
}

void add_common(CLI::App* cmd, CommonOpts& opt) {
    cmd->add_option("--p", opt.p, "integrability exponent");
    cmd->add_option("--t", opt.t, "order of smoothness / differences");
    cmd->add_option("--alpha", opt.alpha, "seminorm order for sobolev-check");
    cmd->add_option("--func", opt.func, "cos:<nu>,<amp>[;...] or counterexample:<t0>,<p>,<N>");
    cmd->add_option("--s-grid", opt.s_grid, "geometric:<a>:<b>:<n> or approach:<limit>:<d0>:<n>");
    cmd->add_option("--quad", opt.quad, "M=<int>,L=<int>,G=<int>");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--out", opt.out, "output path (default stdout)");
    cmd->add_option("--format", opt.format, "csv|json|gnuplot");
    cmd->add_option("--jobs", opt.jobs, "worker threads");
    cmd->add_option("--path", opt.path, "grid|spectral (spectral needs p=2)");
    cmd->add_option("--cases", opt.cases, "random cases for check suites");
    cmd->add_option("--lambda", opt.lambda, "Lambda for the t343 checks");
    cmd->add_option("--r", opt.r, "lower smoothness for tl-check");
    cmd->add_option("--n", opt.n, "truncation for counterexample runs");
}

int suite_exit(const SuiteResult& res, const CommonOpts& opt, const char* name) {
    for (const auto& rep : res.reports)
        if (!rep.all_finite()) throw NumericalError(std::string(name) + ": non-finite rows");
    write_reports(res.reports, opt);
    if (res.violations > 0) {
        std::fprintf(stderr, "FAIL %s: %d violation(s); first: %s\n", name, res.violations,
                     res.detail.c_str());
        return 1;
    }
    std::fprintf(stderr, "PASS %s: worst ratio-to-cap %.6f over %d case(s)\n", name, res.worst,
                 opt.cases);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fraclab: fractional smoothness laboratory"};
    app.set_version_flag("--version", fraclab::kVersion);
    app.require_subcommand(1);

    CommonOpts opt;
    auto* bbm = app.add_subcommand("bbm-sweep", "(t-s)^{1/p} seminorm vs fractional Laplacian norm");
    auto* ms = app.add_subcommand("ms-sweep", "s^{1/p} seminorm vs L^p norm");
    auto* cex = app.add_subcommand("counterexample", "bounded Gagliardo vs diverging Butzer families");
    auto* blow = app.add_subcommand("blowup", "Butzer/Gagliardo equivalence-constant blow-up");
    auto* sob = app.add_subcommand("sobolev-check", "sharp Sobolev inequality suite");
    auto* tl = app.add_subcommand("tl-check", "Triebel-Lizorkin estimates at p=2");
    auto* t343 = app.add_subcommand("t343-check", "Lambda-shifted smoothness bound at p=2");
    auto* seq = app.add_subcommand("seq-check", "sequence-space interpolation suites");
    auto* reportc = app.add_subcommand("report", "reload a JSON report and re-emit");
    std::string report_in;
    reportc->add_option("--in", report_in, "input JSON report")->required();
    for (CLI::App* c : {bbm, ms, cex, blow, sob, tl, t343, seq, reportc}) add_common(c, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bbm->parsed() || ms->parsed() || blow->parsed()) {
            const FuncSpec fs = parse_func_spec(opt.func);
            const TrigPoly f = fs.realize();
            const double t = opt.t > 0.0 ? opt.t : 1.0;
            if (opt.s_grid.empty()) throw UsageError("--s-grid is required");
            const auto grid = parse_s_grid(opt.s_grid);
            const auto spec = parse_quad(opt.quad);
            const auto path = parse_path(opt.path);
            SweepReport rep;
            if (bbm->parsed())
                rep = bbm_sweep(f, t, opt.p, grid, spec, path, opt.jobs, opt.seed);
            else if (ms->parsed())
                rep = ms_sweep(f, t, opt.p, grid, spec, path, opt.jobs, opt.seed);
            else
                rep = blowup_sweep(f, t, opt.p, grid, spec, path, opt.jobs, opt.seed);
            if (!rep.all_finite()) throw NumericalError("sweep produced non-finite rows");
            write_reports({rep}, opt);
            return 0;
        }
        if (cex->parsed()) {
            FuncSpec fs;
            if (opt.func == "cos:1,1") {  // flag untouched: build from --p/--n
                fs = parse_func_spec("counterexample:0.5," + std::to_string(opt.p) + "," +
                                     std::to_string(opt.n));
            } else {
                fs = parse_func_spec(opt.func);
                if (fs.kind != FuncSpec::Kind::Counterexample)
                    throw UsageError("counterexample wants --func counterexample:<t0>,<p>,<N>");
            }
            if (opt.s_grid.empty()) throw UsageError("--s-grid is required");
            const auto grid = parse_s_grid(opt.s_grid);
            auto reps = counterexample_sweep(fs.t0, fs.p, fs.n, grid, opt.jobs, opt.seed);
            for (const auto& r : reps)
                if (!r.all_finite()) throw NumericalError("counterexample produced non-finite rows");
            write_reports(reps, opt);
            return 0;
        }
        if (sob->parsed()) {
            if (!opt.s_grid.empty()) {
                // deterministic mode: sweep consecutive (s,t) pairs of the grid
                // for the given function at the given order
                const TrigPoly f = parse_func_spec(opt.func).realize();
                const auto grid = parse_s_grid(opt.s_grid);
                std::vector<std::pair<double, double>> st;
                for (std::size_t i = 0; i + 1 < grid.size(); ++i)
                    st.emplace_back(grid[i], grid[i + 1]);
                const auto path = parse_path(opt.path);
                const auto rep = sobolev_ineq_check({f}, opt.alpha, opt.p, st, parse_quad(opt.quad),
                                                    path, opt.jobs, opt.seed);
                write_reports({rep}, opt);
                for (const auto& row : rep.rows)
                    if (row.ratio > FrozenConstants::sobolev_c) {
                        std::fprintf(stderr, "FAIL sobolev-check: s=%g ratio %g above %g\n",
                                     row.param, row.ratio, FrozenConstants::sobolev_c);
                        return 1;
                    }
                return 0;
            }
            return suite_exit(run_sobolev_suite(opt.seed, opt.cases, opt.jobs), opt, "sobolev-check");
        }
        if (tl->parsed()) {
            if (!opt.s_grid.empty()) {
                const TrigPoly f = parse_func_spec(opt.func).realize();
                const double t = opt.t > 0.0 ? opt.t : 1.0;
                const auto reps =
                    sharp_tl_check_p2({f}, opt.r, t, parse_s_grid(opt.s_grid), opt.jobs, opt.seed);
                write_reports(reps, opt);
                for (const auto& row : reps[0].rows)
                    if (row.ratio > FrozenConstants::tl_rst_c) return 1;
                return 0;
            }
            return suite_exit(run_tl_suite(opt.seed, opt.cases, opt.jobs), opt, "tl-check");
        }
        if (t343->parsed()) {
            if (!opt.s_grid.empty()) {
                const TrigPoly f = parse_func_spec(opt.func).realize();
                const double t = opt.t > 0.0 ? opt.t : 1.0;
                const auto reps = theorem343_p2_check({f}, t, parse_s_grid(opt.s_grid), opt.lambda,
                                                      opt.jobs, opt.seed);
                write_reports(reps, opt);
                for (const auto& rep : reps)
                    for (const auto& row : rep.rows)
                        if (row.ratio > FrozenConstants::aux6_c) return 1;
                return 0;
            }
            return suite_exit(run_t343_suite(opt.seed, opt.cases, opt.jobs), opt, "t343-check");
        }
        if (seq->parsed()) return suite_exit(run_seq_suite(opt.seed, opt.cases, opt.jobs), opt, "seq-check");
        if (reportc->parsed()) {
            write_reports(load_reports(report_in), opt);
            return 0;
        }
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const RegimeViolation& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const SupportTooLarge& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
