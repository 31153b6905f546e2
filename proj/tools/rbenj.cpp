#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rbenj/analysis.hpp"
#include "rbenj/io.hpp"

using namespace rbenj;

namespace {

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(std::stod(piece));
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::map<std::string, double> run_constants(const RunConfig& cfg,
                                            const SymbolTable& table,
                                            const SpectralField& eta0,
                                            const Trajectory& traj) {
    double C = estimate_bilinear_constant(cfg.solver.sobolev_s, cfg.solver.sobolev_s,
                                          32, eta0.grid(), cfg.params,
                                          cfg.seed + 1);
    double Tp = estimate_local_time(sobolev_norm(eta0, cfg.solver.sobolev_s), C,
                                    cfg.params.alpha);
    auto [K1, K2] = norm_equivalence_constants(cfg.params, eta0.grid());
    double m_star = 0.0;
    for (const auto& r : traj.records) m_star = std::max(m_star, r.norm_s);
    return {{"C_ss", C},
            {"T_prime", Tp},
            {"K1_equiv", K1},
            {"K2_equiv", K2},
            {"K2_envelope", 1.5 * cfg.params.alpha * C * m_star},
            {"K3_envelope", 0.75 * cfg.params.alpha * C},
            {"M_star", m_star}};
}

std::vector<ProbeAssertion> run_assertions(const Trajectory& traj) {
    const auto& first = traj.records.front();
    const auto& last = traj.records.back();
    double mass_scale = std::max(std::abs(first.mass), 1e-300);
    double mass_drift = std::abs(last.mass - first.mass) / mass_scale;
    double triple_scale = std::max(first.triple_norm1, 1e-300);
    double triple_drift = std::abs(last.triple_norm1 - first.triple_norm1) /
                          triple_scale;
    return {{"mass_drift <= 1e-13", mass_drift <= 1e-13, mass_drift, 1e-13},
            {"triple_norm1_drift <= 1e-6", triple_drift <= 1e-6, triple_drift,
             1e-6}};
}

int cmd_simulate(const std::string& config_path, std::string out_dir) {
    RunConfig cfg = parse_config_file(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    PeriodicGrid grid(cfg.n_points);
    SymbolTable table(grid, cfg.params);
    SpectralField eta0 = build_initial_condition(cfg.ic, grid);
    Timer timer;
    Trajectory traj = solve(eta0, table, cfg.solver);
    write_trajectory_outputs(traj, cfg, cfg.output_dir,
                             run_constants(cfg, table, eta0, traj),
                             run_assertions(traj), timer.seconds());
    return 0;
}

int cmd_linear(const std::string& config_path, const std::string& times_str,
               std::string out_dir) {
    RunConfig cfg = parse_config_file(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    std::vector<double> times = parse_list(times_str);
    std::sort(times.begin(), times.end());
    PeriodicGrid grid(cfg.n_points);
    SymbolTable table(grid, cfg.params);
    SpectralField eta0 = build_initial_condition(cfg.ic, grid);
    Timer timer;
    auto snaps = solve_linear(eta0, times, table);

    Trajectory traj;
    for (auto& s : snaps) {
        traj.times.push_back(s.t);
        traj.records.push_back(diagnostics(s.state, table, cfg.solver.sobolev_s, s.t));
        traj.states.push_back(std::move(s.state));
    }
    write_trajectory_outputs(traj, cfg, cfg.output_dir, {}, {}, timer.seconds());
    return 0;
}

int cmd_symbols(const std::string& config_path, const std::string& out_path) {
    RunConfig cfg = parse_config_file(config_path);
    PeriodicGrid grid(cfg.n_points);
    SymbolTable table(grid, cfg.params);
    std::ostringstream csv;
    csv << "k,m,phi\n";
    for (int k = -grid.mode_cutoff(); k <= grid.mode_cutoff(); ++k)
        csv << k << ',' << format_full(table.m(k)) << ',' << format_full(table.phi(k))
            << '\n';
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << csv.str();
    }
    return 0;
}

int cmd_split(const std::string& config_path, int cutoff, std::string out_dir) {
    RunConfig cfg = parse_config_file(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    PeriodicGrid grid(cfg.n_points);
    SymbolTable table(grid, cfg.params);
    SpectralField eta0 = build_initial_condition(cfg.ic, grid);
    Timer timer;
    SplitReport split = split_experiment(eta0, cutoff, table, cfg.solver);

    ProbeReport rep;
    rep.probe = "split";
    rep.seed = cfg.seed;
    rep.constants = {{"cutoff_n", static_cast<double>(split.cutoff_n)},
                     {"low_norm_s", split.low_norm_s},
                     {"high_norm_s", split.high_norm_s}};
    rep.series.emplace_back("t", split.times);
    rep.series.emplace_back("reconstruction_error", split.reconstruction_error);
    rep.series.emplace_back("tail_norm_s", split.tail_norms);
    double worst = *std::max_element(split.reconstruction_error.begin(),
                                     split.reconstruction_error.end());
    rep.assertions.push_back(
        {"reconstruction <= 1e-12", worst <= 1e-12, worst, 1e-12});
    write_probe_report(rep, cfg, cfg.output_dir, timer.seconds());
    return rep.all_pass() ? 0 : 3;
}

int cmd_probe_contraction(const std::string& config_path, double t_fraction,
                          int trials, std::string out_dir) {
    RunConfig cfg = parse_config_file(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    PeriodicGrid grid(cfg.n_points);
    SymbolTable table(grid, cfg.params);
    SpectralField eta0 = build_initial_condition(cfg.ic, grid);
    Timer timer;
    double C = estimate_bilinear_constant(cfg.solver.sobolev_s, cfg.solver.sobolev_s,
                                          32, grid, cfg.params, cfg.seed + 1);
    double Tp = estimate_local_time(sobolev_norm(eta0, cfg.solver.sobolev_s), C,
                                    cfg.params.alpha);
    ProbeReport rep = contraction_probe(eta0, t_fraction * Tp, trials, table,
                                        cfg.solver.sobolev_s, cfg.seed);
    write_probe_report(rep, cfg, cfg.output_dir, timer.seconds());
    return rep.all_pass() ? 0 : 3;
}

int cmd_probe_continuity(const std::string& config_path,
                         const std::string& epsilons_str, std::string out_dir) {
    RunConfig cfg = parse_config_file(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    PeriodicGrid grid(cfg.n_points);
    SymbolTable table(grid, cfg.params);
    SpectralField eta0 = build_initial_condition(cfg.ic, grid);
    Timer timer;
    ProbeReport rep = continuity_probe(eta0, parse_list(epsilons_str),
                                       cfg.solver.t_end, table, cfg.solver,
                                       cfg.seed);
    write_probe_report(rep, cfg, cfg.output_dir, timer.seconds());
    return rep.all_pass() ? 0 : 3;
}

int cmd_convergence(const std::string& config_path, const std::string& dts_str,
                    const std::string& grids_str, std::string out_dir) {
    RunConfig cfg = parse_config_file(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    std::vector<int> grids;
    for (double g : parse_list(grids_str)) grids.push_back(static_cast<int>(g));
    Timer timer;
    ProbeReport rep = convergence_study(
        [&](const PeriodicGrid& g) { return build_initial_condition(cfg.ic, g); },
        cfg.params, cfg.solver, parse_list(dts_str), grids);
    write_probe_report(rep, cfg, cfg.output_dir, timer.seconds());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic pseudospectral solver for regularized Benjamin-type "
                 "equations"};
    app.require_subcommand(1);

    std::string config_path, out_dir, times_str = "1", epsilons_str = "1e-2,1e-4";
    std::string dts_str = "4e-3,2e-3,1e-3", grids_str = "64,128,256";
    std::string symbols_out;
    int cutoff = 8, trials = 100;
    double t_fraction = 0.25;

    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "run configuration file")
            ->required();
        sub->add_option("--output", out_dir, "output directory override");
    };

    auto* sim = app.add_subcommand("simulate", "nonlinear evolution");
    add_config(sim);
    auto* lin = app.add_subcommand("linear", "exact linear evolution");
    add_config(lin);
    lin->add_option("--times", times_str, "comma-separated output times");
    auto* sym = app.add_subcommand("symbols", "dump k,m,phi table as CSV");
    sym->add_option("--config", config_path, "run configuration file")->required();
    sym->add_option("--out", symbols_out, "CSV path (stdout if omitted)");
    auto* spl = app.add_subcommand("split", "low/high frequency splitting run");
    add_config(spl);
    spl->add_option("--cutoff", cutoff, "splitting mode cutoff N");
    auto* pc = app.add_subcommand("probe-contraction", "Duhamel-map contraction probe");
    add_config(pc);
    pc->add_option("--t-fraction", t_fraction, "T as a fraction of T' (default 0.25)");
    pc->add_option("--trials", trials, "number of sampled pairs");
    auto* pn = app.add_subcommand("probe-continuity", "continuous-dependence probe");
    add_config(pn);
    pn->add_option("--epsilons", epsilons_str, "comma-separated perturbation sizes");
    auto* cv = app.add_subcommand("convergence", "temporal/spatial convergence study");
    add_config(cv);
    cv->add_option("--dts", dts_str, "comma-separated time steps");
    cv->add_option("--grids", grids_str, "comma-separated grid sizes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(config_path, out_dir);
        if (lin->parsed()) return cmd_linear(config_path, times_str, out_dir);
        if (sym->parsed()) return cmd_symbols(config_path, symbols_out);
        if (spl->parsed()) return cmd_split(config_path, cutoff, out_dir);
        if (pc->parsed())
            return cmd_probe_contraction(config_path, t_fraction, trials, out_dir);
        if (pn->parsed()) return cmd_probe_continuity(config_path, epsilons_str, out_dir);
        if (cv->parsed())
            return cmd_convergence(config_path, dts_str, grids_str, out_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NonContractionError& e) {
        std::cerr << "numerical failure: " << e.what()
                  << " (last ratio " << e.last_ratio << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
