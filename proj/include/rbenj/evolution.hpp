#ifndef RBENJ_EVOLUTION_HPP
#define RBENJ_EVOLUTION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rbenj/diagnostics.hpp"
#include "rbenj/propagator.hpp"

namespace rbenj {

enum class Stepper { PicardDuhamel, Rk4 };

struct SolverConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    Stepper method = Stepper::Rk4;
    double picard_tol = 1e-12;
    int picard_max_iter = 100;
    int quad_substeps = 4;  // Duhamel quadrature nodes per step
    int diagnostics_every = 10;
    bool dealias = true;
    double sobolev_s = 1.0;

    void validate() const;
};

/// Signals a failed Picard fixed-point iteration (dt too large relative to
/// the contraction window T'). Carries the last measured ratio.
struct NonContractionError : std::runtime_error {
    double last_ratio;
    explicit NonContractionError(double ratio)
        : std::runtime_error("Picard iteration is not contracting (dt too large)"),
          last_ratio(ratio) {}
};

/// Signals a non-finite state (blow-up of the discrete system).
struct BlowUpError : std::runtime_error {
    double t;
    explicit BlowUpError(double t_)
        : std::runtime_error("non-finite state encountered"), t(t_) {}
};

/// A_j( F - (3 alpha / 4) F^2 ). Mode 0 of the output is exactly zero.
SpectralField rhs_full(const SpectralField& F, const SymbolTable& table,
                       bool dealias = true);

/// A_j( W - (3 alpha / 4)( u W + W^2 ) ), the coupled low/high-frequency
/// problem's right-hand side.
SpectralField rhs_coupled(const SpectralField& W, const SpectralField& u_t,
                          const SymbolTable& table, bool dealias = true);

using RhsFn = std::function<SpectralField(double t, const SpectralField&)>;

/// Classical 4-stage explicit step. Admissible here because |phi_j| is
/// uniformly bounded by 1/(b + 2 sqrt(a)): the semidiscrete system is not
/// stiff, at any grid resolution.
SpectralField step_rk4(const SpectralField& F, double t, double dt, const RhsFn& rhs);

/// One step of the Duhamel fixed-point iteration: returns the fixed point of
///   v(tau) = S(tau) F - (3 alpha / 4) int_0^tau S(tau - t') A_j v^2(t') dt'
/// at tau = dt, with the integral on quad_substeps composite-trapezoid nodes.
/// Throws NonContractionError if iterate distances grow for three consecutive
/// iterations or picard_max_iter is exceeded.
SpectralField step_picard_duhamel(const SpectralField& F, double dt,
                                  const SymbolTable& table, const SolverConfig& cfg);

struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> states;
    std::vector<DiagnosticsRecord> records;

    const SpectralField& final_state() const { return states.back(); }
    double final_time() const { return times.back(); }
};

/// Nonlinear evolution on [0, t_end] (t_end < 0 integrates with negative dt).
Trajectory solve(const SpectralField& eta0, const SymbolTable& table,
                 const SolverConfig& cfg);

/// Time-dependent forcing u(t), either closed-form or a stored trajectory
/// with cubic interpolation between snapshots.
class ForcingField {
  public:
    explicit ForcingField(std::function<SpectralField(double)> eval)
        : eval_(std::move(eval)) {}

    /// Stored-trajectory forcing; requires snapshots at every trajectory step
    /// (diagnostics_every == 1) or accepts interpolation error otherwise.
    static ForcingField from_trajectory(Trajectory traj);

    SpectralField operator()(double t) const { return eval_(t); }

  private:
    std::function<SpectralField(double)> eval_;
};

/// Evolution of the coupled problem w_t = A_j(w - (3 alpha/4)(u w + w^2)).
/// Uses RK4 with u evaluated at the stage times.
Trajectory solve_coupled(const SpectralField& w0, const ForcingField& u,
                         const SymbolTable& table, const SolverConfig& cfg);

/// T' = 2 / (3 alpha C (2 norm_s)), the contraction window; +inf for zero data.
double estimate_local_time(double norm_s, double C, double alpha);

/// Empirical certificate for C_{s,r} in ||A_j(uv)||_r <= C ||u||_s ||v||_r:
/// running max of the ratio over random band-limited pairs, times a safety
/// factor 2. Deterministic under the seed.
double estimate_bilinear_constant(double s, double r, int trials,
                                  const PeriodicGrid& grid, const ModelParams& p,
                                  std::uint64_t seed = 12345);

}  // namespace rbenj

#endif
