#ifndef RBENJ_ANALYSIS_HPP
#define RBENJ_ANALYSIS_HPP

#include <map>
#include <string>
#include <utility>

#include "rbenj/evolution.hpp"

namespace rbenj {

/// (K1, K2) with K1 (1+k^2) <= m_j(k) <= K2 (1+k^2) exactly on the retained
/// modes: the mode scan of rho(k) = m(k)/(1+k^2) combined with the
/// asymptotic bracket [a/2, 3a/2].
std::pair<double, double> norm_equivalence_constants(const ModelParams& p,
                                                     const PeriodicGrid& grid);

/// Orthogonal splitting: low keeps |k| <= N, high keeps |k| > N.
std::pair<SpectralField, SpectralField> frequency_split(const SpectralField& F,
                                                        int N);

struct ProbeAssertion {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double threshold = 0.0;
};

struct ProbeReport {
    std::string probe;
    std::uint64_t seed = 0;
    std::map<std::string, double> constants;
    std::vector<ProbeAssertion> assertions;
    // Named, equal-length columns (time series, sweeps).
    std::vector<std::pair<std::string, std::vector<double>>> series;

    bool all_pass() const {
        for (const auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }
};

struct SplitReport {
    int cutoff_n = 0;
    double low_norm_s = 0.0;   // ||w_0||_s
    double high_norm_s = 0.0;  // ||eta_N^0||_s
    std::vector<double> times;
    std::vector<double> reconstruction_error;  // ||(v+w)(t) - eta(t)||_1
    std::vector<DiagnosticsRecord> low_records, high_records, reference_records;
    std::vector<double> tail_norms;  // ||eta_N^0||_s for N = 0..mode_cutoff
};

/// Joint evolution of (v, w): v follows the full equation from the high part
/// eta_N^0, w follows the coupled equation with u = 2v, advanced with shared
/// RK4 stages so that v + w reproduces the direct solve stage by stage.
std::pair<Trajectory, Trajectory> solve_split_joint(const SpectralField& v0,
                                                    const SpectralField& w0,
                                                    const SymbolTable& table,
                                                    const SolverConfig& cfg);

/// The frequency-splitting experiment behind the low-regularity global
/// result: compares v + w against the direct solution of the full problem.
SplitReport split_experiment(const SpectralField& eta0, int N,
                             const SymbolTable& table, const SolverConfig& cfg);

/// Samples pairs in the ball Lambda(T, M = 2 ||eta0||_s) (time-constant and
/// degree-<=2 time-polynomial paths) and measures the Duhamel map's
/// contraction ratio; a probe can only falsify the claim, never prove it.
ProbeReport contraction_probe(const SpectralField& eta0, double T, int trials,
                              const SymbolTable& table, double s,
                              std::uint64_t seed);

/// Evolves eta0 and eta0 + eps*delta and checks the measured divergence
/// against the continuous-dependence envelope
///   K2 eps e^{K2 t} / (K2 + K3 eps (1 - e^{K2 t})),
/// with K2 = 3 alpha C M*/2, K3 = 3 alpha C / 4 from empirical constants.
ProbeReport continuity_probe(const SpectralField& eta0,
                             const std::vector<double>& epsilons, double t_end,
                             const SymbolTable& table, const SolverConfig& cfg,
                             std::uint64_t seed);

/// Temporal Richardson orders plus a spatial resolution sweep.
ProbeReport convergence_study(
    const std::function<SpectralField(const PeriodicGrid&)>& ic,
    const ModelParams& p, const SolverConfig& base, const std::vector<double>& dts,
    const std::vector<int>& grids);

/// Empirical Sobolev-embedding certificate: max ||f||_inf / ||f||_1 over
/// random fields, times a safety factor 2.
double estimate_embedding_constant(const PeriodicGrid& grid, int trials,
                                   std::uint64_t seed = 2024);

/// Empirical certificate for ||v^2||_s <= K0 ||v||_inf ||v||_s.
double estimate_square_constant(const PeriodicGrid& grid, double s, int trials,
                                std::uint64_t seed = 2025);

}  // namespace rbenj

#endif
