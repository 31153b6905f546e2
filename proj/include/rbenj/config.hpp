#ifndef RBENJ_CONFIG_HPP
#define RBENJ_CONFIG_HPP

#include <string>
#include <vector>

#include "rbenj/evolution.hpp"

namespace rbenj {

struct InitialConditionSpec {
    enum class Kind { Cosine, GaussianPeriodic, RandomSobolev, CoeffFile };
    Kind kind = Kind::Cosine;
    double amplitude = 1.0;   // Cosine, GaussianPeriodic
    int wavenumber = 1;       // Cosine
    double width = 1.0;       // GaussianPeriodic
    double s = 1.0;           // RandomSobolev
    double norm = 1.0;        // RandomSobolev
    std::uint64_t seed = 0;   // RandomSobolev
    std::string path;         // CoeffFile

    /// Accepts cosine(amp,k), gaussian(amp,width), random_sobolev(s,norm,seed),
    /// coeff_file(path).
    static InitialConditionSpec parse(const std::string& text);
};

struct RunConfig {
    ModelParams params;
    int n_points = 256;
    SolverConfig solver;
    InitialConditionSpec ic;
    std::uint64_t seed = 0;
    std::string output_dir = "out";

    // Parsed key/value pairs in file order, echoed verbatim into summary.json.
    std::vector<std::pair<std::string, std::string>> entries;
};

/// Line-oriented `key = value` grammar with `#` comments. Unknown keys are
/// errors; every reported error names the offending key.
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path);

/// Deterministic construction of the initial state from its spec.
SpectralField build_initial_condition(const InitialConditionSpec& spec,
                                      const PeriodicGrid& grid);

}  // namespace rbenj

#endif
