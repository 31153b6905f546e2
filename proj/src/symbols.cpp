#include "rbenj/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace rbenj {

void ModelParams::validate() const {
    // alpha == 0 is tolerated here: the degenerate linear regime backs the
    // exact-propagator oracles. The config layer still rejects it.
    if (alpha < 0.0) throw std::invalid_argument("ModelParams: alpha must be >= 0");
    if (!(a > 0.0)) throw std::invalid_argument("ModelParams: a must be > 0");
    if (!(h > 0.0)) throw std::invalid_argument("ModelParams: h must be > 0");
    if (b < 0.0) throw std::invalid_argument("ModelParams: b must be >= 0");
    if (b == 0.0 && !allow_zero_b)
        throw std::invalid_argument(
            "ModelParams: b = 0 requires the allow_zero_b override");
}

namespace {
// k coth(hk), with a series branch near 0 (coth z = 1/z + z/3 - ...) to
// avoid cancellation; at k = 0 this is the limit value 1/h.
double k_coth_hk(double k, double h) {
    double z = h * k;
    if (std::abs(z) < 1e-4) return 1.0 / h + h * k * k / 3.0;
    return k / std::tanh(z);
}
}  // namespace

double m_symbol(double k, const ModelParams& p) {
    if (p.op == DispersionOperator::Hilbert)
        return 1.0 + p.b * std::abs(k) + p.a * k * k;
    return 1.0 + p.b * k_coth_hk(k, p.h) + p.a * k * k;
}

double phi_symbol(double k, const ModelParams& p) {
    if (k == 0.0) return 0.0;
    return k / m_symbol(k, p);
}

double phi_bound(const ModelParams& p) { return 1.0 / (p.b + 2.0 * std::sqrt(p.a)); }

SymbolTable::SymbolTable(const PeriodicGrid& grid, const ModelParams& params)
    : grid_(grid), params_(params) {
    params_.validate();
    const int kmax = grid_.mode_cutoff();
    m_.resize(kmax + 1);
    phi_.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        m_[k] = m_symbol(k, params_);
        phi_[k] = phi_symbol(k, params_);
        if (!(m_[k] >= 1.0))
            throw std::logic_error("SymbolTable: m(k) < 1");
    }
}

namespace {
SpectralField multiply_odd_imag(const SpectralField& F, auto&& mult) {
    // F(k) -> i mult(k) F(k) with mult odd and mult(0) = 0; preserves the
    // conjugate symmetry of real fields.
    SpectralField out(F.grid());
    for (int k = 1; k <= F.cutoff(); ++k) {
        double c = mult(k);
        out.at(k) = std::complex<double>(0.0, c) * F.coeff(k);
        out.at(-k) = std::complex<double>(0.0, -c) * F.coeff(-k);
    }
    return out;
}
}  // namespace

SpectralField hilbert_transform(const SpectralField& F) {
    return multiply_odd_imag(F, [](int) { return 1.0; });
}

SpectralField strip_hilbert_transform(const SpectralField& F, const ModelParams& p) {
    return multiply_odd_imag(F, [&](int k) { return 1.0 / std::tanh(p.h * k); });
}

SpectralField apply_generator(const SpectralField& F, const SymbolTable& table) {
    if (!(F.grid() == table.grid()))
        throw std::invalid_argument("apply_generator: grid mismatch");
    return multiply_odd_imag(F, [&](int k) { return -table.phi(k); });
}

double triple_norm1(const SpectralField& F, const SymbolTable& table) {
    double sum = 0.0;
    for (int k = -F.cutoff(); k <= F.cutoff(); ++k)
        sum += table.m(k) * std::norm(F.coeff(k));
    return std::sqrt(sum);
}

}  // namespace rbenj
