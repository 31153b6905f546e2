#include "rbenj/diagnostics.hpp"

namespace rbenj {

DiagnosticsRecord diagnostics(const SpectralField& F, const SymbolTable& table,
                              double s, double t) {
    DiagnosticsRecord rec;
    rec.t = t;
    rec.mass = F.coeff(0).real();
    rec.norm0 = sobolev_norm(F, 0.0);
    rec.norm_half = sobolev_norm(F, 0.5);
    rec.norm1 = sobolev_norm(F, 1.0);
    rec.norm_s = sobolev_norm(F, s);
    rec.triple_norm1 = triple_norm1(F, table);
    rec.sup_norm = inverse_transform(F).max_abs();
    return rec;
}

}  // namespace rbenj
