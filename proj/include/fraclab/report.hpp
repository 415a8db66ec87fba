#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraclab/errors.hpp"
#include "fraclab/version.hpp"

namespace fraclab {

struct ReportRow {
    double param = 0.0;
    double raw = 0.0;
    double normalized = 0.0;
    double reference = 0.0;
    double ratio = 0.0;
};

struct SweepReport {
    std::string experiment;
    double p = 0.0;
    double t = 0.0;
    std::int64_t n = 0;            // truncation / size parameter when present
    std::string quad;              // quadrature / truncation description
    std::uint64_t seed = 0;
    std::string code_version = kVersion;
    bool degenerate = false;       // reference vanished; ratios reported as 0
    std::vector<ReportRow> rows;

    bool all_finite() const {
        for (const auto& r : rows)
            if (!std::isfinite(r.param) || !std::isfinite(r.raw) || !std::isfinite(r.normalized) ||
                !std::isfinite(r.reference) || !std::isfinite(r.ratio))
                return false;
        return true;
    }
};

inline bool operator==(const ReportRow& a, const ReportRow& b) {
    return a.param == b.param && a.raw == b.raw && a.normalized == b.normalized &&
           a.reference == b.reference && a.ratio == b.ratio;
}

inline bool operator==(const SweepReport& a, const SweepReport& b) {
    return a.experiment == b.experiment && a.p == b.p && a.t == b.t && a.n == b.n &&
           a.quad == b.quad && a.seed == b.seed && a.code_version == b.code_version &&
           a.degenerate == b.degenerate && a.rows == b.rows;
}

namespace detail {

inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

// header `experiment,p,t,param,raw,normalized,reference,ratio`, 17 significant
// digits, LF endings, no trailing separator
inline std::string to_csv(const SweepReport& rep) {
    std::string out = "experiment,p,t,param,raw,normalized,reference,ratio\n";
    for (const auto& r : rep.rows) {
        out += rep.experiment;
        out += ',';
        out += detail::g17(rep.p);
        out += ',';
        out += detail::g17(rep.t);
        out += ',';
        out += detail::g17(r.param);
        out += ',';
        out += detail::g17(r.raw);
        out += ',';
        out += detail::g17(r.normalized);
        out += ',';
        out += detail::g17(r.reference);
        out += ',';
        out += detail::g17(r.ratio);
        out += '\n';
    }
    return out;
}

inline nlohmann::json to_json(const SweepReport& rep) {
    nlohmann::json j;
    j["experiment"] = rep.experiment;
    j["p"] = rep.p;
    j["t"] = rep.t;
    j["n"] = rep.n;
    j["quad"] = rep.quad;
    j["seed"] = rep.seed;
    j["code_version"] = rep.code_version;
    j["degenerate"] = rep.degenerate;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rep.rows)
        j["rows"].push_back({{"param", r.param},
                             {"raw", r.raw},
                             {"normalized", r.normalized},
                             {"reference", r.reference},
                             {"ratio", r.ratio}});
    return j;
}

inline SweepReport report_from_json(const nlohmann::json& j) {
    SweepReport rep;
    rep.experiment = j.at("experiment").get<std::string>();
    rep.p = j.at("p").get<double>();
    rep.t = j.at("t").get<double>();
    rep.n = j.at("n").get<std::int64_t>();
    rep.quad = j.at("quad").get<std::string>();
    rep.seed = j.at("seed").get<std::uint64_t>();
    rep.code_version = j.at("code_version").get<std::string>();
    rep.degenerate = j.at("degenerate").get<bool>();
    for (const auto& r : j.at("rows"))
        rep.rows.push_back({r.at("param").get<double>(), r.at("raw").get<double>(),
                            r.at("normalized").get<double>(), r.at("reference").get<double>(),
                            r.at("ratio").get<double>()});
    return rep;
}

inline std::string to_gnuplot(const SweepReport& rep) {
    std::string out;
    out += "set title '" + rep.experiment + "'\n";
    out += "set logscale xy\nset xlabel 'param'\nset ylabel 'value'\n";
    out += "$data << EOD\n";
    for (const auto& r : rep.rows)
        out += detail::g17(r.param) + " " + detail::g17(r.normalized) + " " +
               detail::g17(r.reference) + " " + detail::g17(r.ratio) + "\n";
    out += "EOD\n";
    out += "plot $data using 1:2 with linespoints title 'normalized', \\\n";
    out += "     $data using 1:3 with lines title 'reference'\n";
    return out;
}

inline void emit(const SweepReport& rep, const std::string& format, const std::string& path) {
    std::string payload;
    if (format == "csv")
        payload = to_csv(rep);
    else if (format == "json")
        payload = to_json(rep).dump(2) + "\n";
    else if (format == "gnuplot")
        payload = to_gnuplot(rep);
    else
        throw UsageError("emit: unknown format '" + format + "'");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot open '" + path + "' for writing");
    out << payload;
    if (!out) throw std::runtime_error("emit: write failed for '" + path + "'");
}

// Accepts a single report object or an array of them.
inline std::vector<SweepReport> load_reports(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_reports: cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    std::vector<SweepReport> out;
    if (j.is_array())
        for (const auto& item : j) out.push_back(report_from_json(item));
    else
        out.push_back(report_from_json(j));
    return out;
}

inline SweepReport load_report(const std::string& path) {
    const auto reps = load_reports(path);
    if (reps.size() != 1)
        throw std::runtime_error("load_report: expected exactly one report in '" + path + "'");
    return reps.front();
}

}  // namespace fraclab
