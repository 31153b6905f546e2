#ifndef RBENJ_TESTS_ORACLES_HPP
#define RBENJ_TESTS_ORACLES_HPP

// Independent brute-force oracles used by the test suites. Everything here
// deliberately avoids the FFT-based implementation paths it checks.

#include <random>

#include "rbenj/fields.hpp"
#include "rbenj/symbols.hpp"

namespace rbenj::oracle {

/// Truncated convolution (FG)^(k) = sum_m F(m) G(k-m), |m|,|k-m| <= cutoff.
inline SpectralField convolution(const SpectralField& F, const SpectralField& G) {
    SpectralField out(F.grid());
    const int K = F.cutoff();
    for (int k = -K; k <= K; ++k) {
        std::complex<double> sum{0.0, 0.0};
        for (int m = -K; m <= K; ++m)
            if (std::abs(k - m) <= K) sum += F.coeff(m) * G.coeff(k - m);
        out.at(k) = sum;
    }
    return out;
}

/// Dense realization of A_j(F - (3 alpha/4) F^2) by direct convolution and
/// per-mode multiplication, no transforms involved.
inline SpectralField rhs_dense(const SpectralField& F, const SymbolTable& table) {
    SpectralField sq = convolution(F, F);
    SpectralField arg = F - (0.75 * table.params().alpha) * sq;
    SpectralField out(F.grid());
    for (int k = -F.cutoff(); k <= F.cutoff(); ++k)
        out.at(k) = std::complex<double>(0.0, -table.phi(k)) * arg.coeff(k);
    return out;
}

/// Real-symmetric field with i.i.d. coefficients on |k| <= band.
inline SpectralField random_field(const PeriodicGrid& grid, int band,
                                  std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralField F(grid);
    F.at(0) = gauss(rng);
    for (int k = 1; k <= band; ++k) {
        F.at(k) = {gauss(rng), gauss(rng)};
        F.at(-k) = std::conj(F.coeff(k));
    }
    return F;
}

/// Trapezoidal quadrature of (1/2pi) int |f|^2 dx on the collocation grid
/// (periodic: trapezoid == rectangle rule).
inline double l2_quadrature(const RealField& f) {
    double sum = 0.0;
    for (double v : f.values()) sum += v * v;
    return sum / f.grid().n_points();
}

}  // namespace rbenj::oracle

#endif
