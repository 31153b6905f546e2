#include "rbenj/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rbenj {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

std::string time_tag(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", t);
    return buf;
}

ordered_json assertions_json(const std::vector<ProbeAssertion>& assertions) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : assertions)
        arr.push_back({{"name", a.name},
                       {"pass", a.pass},
                       {"measured", format_full(a.measured)},
                       {"threshold", format_full(a.threshold)}});
    return arr;
}

ordered_json summary_base(const RunConfig& cfg,
                          const std::map<std::string, double>& constants,
                          const std::vector<ProbeAssertion>& assertions) {
    ordered_json j;
    ordered_json echo = ordered_json::object();
    for (const auto& [k, v] : cfg.entries) echo[k] = v;
    j["config"] = echo;
    ordered_json consts = ordered_json::object();
    for (const auto& [k, v] : constants) consts[k] = format_full(v);
    j["empirical_constants"] = consts;
    j["assertions"] = assertions_json(assertions);
    return j;
}

void write_timing(const std::string& dir, double wall_clock_s) {
    auto out = open_out(dir + "/timing.txt");
    out << "wall_clock_s = " << format_full(wall_clock_s) << "\n";
}

}  // namespace

void write_snapshot_csv(const std::string& path, const SpectralField& F) {
    auto out = open_out(path);
    out << "k,re,im\n";
    for (int k = -F.cutoff(); k <= F.cutoff(); ++k)
        out << k << ',' << format_full(F.coeff(k).real()) << ','
            << format_full(F.coeff(k).imag()) << '\n';
}

SpectralField read_snapshot_csv(const std::string& path, const PeriodicGrid& grid) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != "k,re,im")
        throw std::invalid_argument("'" + path + "': bad snapshot header");
    SpectralField F(grid);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string ks, res, ims;
        if (!std::getline(ss, ks, ',') || !std::getline(ss, res, ',') ||
            !std::getline(ss, ims))
            throw std::invalid_argument("'" + path + "': malformed row");
        int k = std::stoi(ks);
        if (std::abs(k) > grid.mode_cutoff())
            throw std::invalid_argument("'" + path + "': mode above grid cutoff");
        F.at(k) = {std::stod(res), std::stod(ims)};
    }
    if (F.symmetry_defect() > 1e-12)
        throw std::invalid_argument("'" + path +
                                    "': broken conjugate symmetry");
    return F;
}

void write_trajectory_outputs(const Trajectory& traj, const RunConfig& cfg,
                              const std::string& dir,
                              const std::map<std::string, double>& constants,
                              const std::vector<ProbeAssertion>& assertions,
                              double wall_clock_s) {
    fs::create_directories(dir);
    {
        auto out = open_out(dir + "/diagnostics.csv");
        out << "t,mass,norm0,norm_half,norm1,norm_s,triple_norm1,sup_norm\n";
        for (const auto& r : traj.records)
            out << format_full(r.t) << ',' << format_full(r.mass) << ','
                << format_full(r.norm0) << ',' << format_full(r.norm_half) << ','
                << format_full(r.norm1) << ',' << format_full(r.norm_s) << ','
                << format_full(r.triple_norm1) << ',' << format_full(r.sup_norm)
                << '\n';
    }
    if (!traj.states.empty()) {
        write_snapshot_csv(dir + "/snapshot_" + time_tag(traj.times.front()) + ".csv",
                           traj.states.front());
        if (traj.states.size() > 1)
            write_snapshot_csv(
                dir + "/snapshot_" + time_tag(traj.times.back()) + ".csv",
                traj.states.back());
    }
    ordered_json j = summary_base(cfg, constants, assertions);
    open_out(dir + "/summary.json") << j.dump(2) << '\n';
    write_timing(dir, wall_clock_s);
}

void write_probe_report(const ProbeReport& report, const RunConfig& cfg,
                        const std::string& dir, double wall_clock_s) {
    fs::create_directories(dir);
    {
        auto out = open_out(dir + "/report.csv");
        size_t rows = 0;
        for (size_t i = 0; i < report.series.size(); ++i) {
            out << (i ? "," : "") << report.series[i].first;
            rows = std::max(rows, report.series[i].second.size());
        }
        out << '\n';
        for (size_t r = 0; r < rows; ++r) {
            for (size_t i = 0; i < report.series.size(); ++i) {
                if (i) out << ',';
                const auto& col = report.series[i].second;
                if (r < col.size()) out << format_full(col[r]);
            }
            out << '\n';
        }
    }
    ordered_json j = summary_base(cfg, report.constants, report.assertions);
    j["probe"] = report.probe;
    j["seed"] = report.seed;
    j["all_pass"] = report.all_pass();
    open_out(dir + "/summary.json") << j.dump(2) << '\n';
    write_timing(dir, wall_clock_s);
}

}  // namespace rbenj
