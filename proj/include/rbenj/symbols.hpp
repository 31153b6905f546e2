#ifndef RBENJ_SYMBOLS_HPP
#define RBENJ_SYMBOLS_HPP

#include <vector>

#include "rbenj/fields.hpp"

namespace rbenj {

enum class DispersionOperator { Hilbert, Strip };

/// Model constants of eta_t + eta_x - (3/2) alpha eta eta_x - a eta_xxt
///                    - b L(eta_xt) = 0.
struct ModelParams {
    double alpha = 1.0;  // nonlinearity strength
    double a = 1.0;      // third-order regularization coefficient
    double b = 1.0;      // dispersive coefficient
    double h = 1.0;      // strip height (Strip operator only)
    DispersionOperator op = DispersionOperator::Hilbert;
    bool allow_zero_b = false;

    /// Throws std::invalid_argument on alpha <= 0, a <= 0, h <= 0, b < 0,
    /// or b == 0 without the override flag.
    void validate() const;
};

/// m_1(k) = 1 + b|k| + a k^2   (Hilbert)
/// m_2(k) = 1 + b k coth(hk) + a k^2, limit value 1 + b/h at k = 0 (Strip).
double m_symbol(double k, const ModelParams& p);

/// phi_j(k) = k / m_j(k); odd, phi_j(0) = 0.
double phi_symbol(double k, const ModelParams& p);

/// Uniform dispersion bound 1/(b + 2 sqrt(a)) >= |phi_1(k)| >= |phi_2(k)|.
double phi_bound(const ModelParams& p);

/// Per-mode m_j(k), phi_j(k) precomputed for a (grid, params) pair.
class SymbolTable {
  public:
    SymbolTable(const PeriodicGrid& grid, const ModelParams& params);

    double m(int k) const { return m_[std::abs(k)]; }
    double phi(int k) const { return k >= 0 ? phi_[k] : -phi_[-k]; }
    const PeriodicGrid& grid() const { return grid_; }
    const ModelParams& params() const { return params_; }

  private:
    PeriodicGrid grid_;
    ModelParams params_;
    std::vector<double> m_, phi_;  // indexed by |k|
};

/// Hilbert transform: F(k) -> i sgn(k) F(k), mode 0 -> 0.
SpectralField hilbert_transform(const SpectralField& F);

/// Strip Hilbert transform: F(k) -> i coth(hk) F(k), mode 0 -> 0.
SpectralField strip_hilbert_transform(const SpectralField& F, const ModelParams& p);

/// The group generator A_j: F(k) -> -i phi_j(k) F(k).
SpectralField apply_generator(const SpectralField& F, const SymbolTable& table);

/// m(k)-weighted spectral norm, conserved by the nonlinear flow and
/// equivalent to ||.||_1.
double triple_norm1(const SpectralField& F, const SymbolTable& table);

}  // namespace rbenj

#endif
