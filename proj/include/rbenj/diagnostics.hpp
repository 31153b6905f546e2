#ifndef RBENJ_DIAGNOSTICS_HPP
#define RBENJ_DIAGNOSTICS_HPP

#include "rbenj/spectral.hpp"
#include "rbenj/symbols.hpp"

namespace rbenj {

/// Per-snapshot conserved-quantity record. All norms are truncated norms
/// over the retained modes; sup_norm is the collocation max (a lower bound
/// on the true sup).
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;  // mode-0 coefficient
    double norm0 = 0.0;
    double norm_half = 0.0;
    double norm1 = 0.0;
    double norm_s = 0.0;
    double triple_norm1 = 0.0;
    double sup_norm = 0.0;
};

DiagnosticsRecord diagnostics(const SpectralField& F, const SymbolTable& table,
                              double s, double t = 0.0);

}  // namespace rbenj

#endif
