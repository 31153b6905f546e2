#include "rbenj/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rbenj {

namespace {
std::complex<double> unit_phase(double phi_k, double t) {
    if (phi_k == 0.0 || t == 0.0) return {1.0, 0.0};
    // Reduce phi*t mod 2pi in long double before exponentiating.
    long double arg = -static_cast<long double>(phi_k) * static_cast<long double>(t);
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    long double reduced = std::remainder(arg, two_pi);
    return std::polar(1.0, static_cast<double>(reduced));
}
}  // namespace

PropagatorTable::PropagatorTable(const SymbolTable& symbols, double t) : t_(t) {
    const int kmax = symbols.grid().mode_cutoff();
    phase_.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) phase_[k] = unit_phase(symbols.phi(k), t);
}

SpectralField linear_propagate(const SpectralField& F, double t,
                               const SymbolTable& table) {
    if (!(F.grid() == table.grid()))
        throw std::invalid_argument("linear_propagate: grid mismatch");
    PropagatorTable phases(table, t);
    SpectralField out(F.grid());
    out.at(0) = F.coeff(0);  // phase(0) == 1 exactly
    for (int k = 1; k <= F.cutoff(); ++k) {
        out.at(k) = phases.phase(k) * F.coeff(k);
        out.at(-k) = std::conj(phases.phase(k)) * F.coeff(-k);
    }
    return out;
}

std::vector<LinearSnapshot> solve_linear(const SpectralField& eta0,
                                         const std::vector<double>& times,
                                         const SymbolTable& table) {
    if (!std::is_sorted(times.begin(), times.end()))
        throw std::invalid_argument("solve_linear: times must be sorted");
    std::vector<LinearSnapshot> out;
    out.reserve(times.size());
    for (double t : times)
        out.push_back({t, linear_propagate(eta0, t, table)});
    return out;
}

}  // namespace rbenj
