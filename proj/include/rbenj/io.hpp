#ifndef RBENJ_IO_HPP
#define RBENJ_IO_HPP

#include <map>
#include <string>

#include "rbenj/analysis.hpp"
#include "rbenj/config.hpp"

namespace rbenj {

/// Lossless decimal rendering of a double (17 significant digits).
std::string format_full(double x);

/// `k,re,im` over the retained modes.
void write_snapshot_csv(const std::string& path, const SpectralField& F);

/// Reads a snapshot CSV back onto `grid`; rejects broken conjugate symmetry.
SpectralField read_snapshot_csv(const std::string& path, const PeriodicGrid& grid);

/// Emits diagnostics.csv, snapshot_<t>.csv for the first and final states,
/// and summary.json (config echo, empirical constants, assertions).
/// Wall-clock seconds go to a `timing.txt` sidecar so summary.json stays
/// byte-deterministic.
void write_trajectory_outputs(const Trajectory& traj, const RunConfig& cfg,
                              const std::string& dir,
                              const std::map<std::string, double>& constants = {},
                              const std::vector<ProbeAssertion>& assertions = {},
                              double wall_clock_s = 0.0);

/// Emits report series as report.csv plus summary.json for a probe.
void write_probe_report(const ProbeReport& report, const RunConfig& cfg,
                        const std::string& dir, double wall_clock_s = 0.0);

}  // namespace rbenj

#endif
