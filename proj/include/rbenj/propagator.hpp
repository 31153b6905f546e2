#ifndef RBENJ_PROPAGATOR_HPP
#define RBENJ_PROPAGATOR_HPP

#include <vector>

#include "rbenj/symbols.hpp"

namespace rbenj {

/// Per-mode phases e^{-i phi_j(k) t} of the unitary group S_j(t).
/// Phases are computed fresh from phi(k)*t with extended-precision argument
/// reduction, so arbitrary horizons keep unit modulus.
class PropagatorTable {
  public:
    PropagatorTable(const SymbolTable& symbols, double t);

    std::complex<double> phase(int k) const {
        return k >= 0 ? phase_[k] : std::conj(phase_[-k]);
    }
    double time() const { return t_; }

  private:
    double t_;
    std::vector<std::complex<double>> phase_;  // indexed by |k|; phase(0) == 1
};

/// S_j(t) F: exact linear flow, an isometry in every H^s norm.
SpectralField linear_propagate(const SpectralField& F, double t,
                               const SymbolTable& table);

struct LinearSnapshot {
    double t;
    SpectralField state;
};

/// Exact solve of the linearized Cauchy problem at the requested times
/// (no time-step error). Times must be sorted.
std::vector<LinearSnapshot> solve_linear(const SpectralField& eta0,
                                         const std::vector<double>& times,
                                         const SymbolTable& table);

}  // namespace rbenj

#endif
