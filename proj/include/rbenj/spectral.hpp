#ifndef RBENJ_SPECTRAL_HPP
#define RBENJ_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "rbenj/fields.hpp"

namespace rbenj {

namespace detail {
/// Unnormalized c2c DFT, sign = -1 forward / +1 backward. Size must be a
/// power of two; plans are cached per (size, sign).
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in,
                                      int sign);
}  // namespace detail

/// Analysis under f_hat(k) = (1/2pi) int f e^{-ikx} dx, truncated past the
/// cutoff (the Nyquist mode is discarded).
SpectralField forward_transform(const RealField& f);

/// Synthesis f(x_j) = sum_k F(k) e^{i k x_j}. Rejects coefficient sets whose
/// conjugate-symmetry defect exceeds `symmetry_tol` (corrupted state).
RealField inverse_transform(const SpectralField& F, double symmetry_tol = 1e-8);

/// ||F||_s = sqrt( sum_k (1+k^2)^s |F(k)|^2 ), truncated.
double sobolev_norm(const SpectralField& F, double s);

/// (F,G)_s = sum_k (1+k^2)^s F(k) conj(G(k)).
std::complex<double> sobolev_inner(const SpectralField& F, const SpectralField& G,
                                   double s);

/// Exact truncation of the trigonometric-polynomial product FG, via
/// zero-padded transforms (pad to 2n, well past the 3/2 rule).
SpectralField dealiased_product(const SpectralField& F, const SpectralField& G);

/// Pointwise product on the native n-point grid, aliased. Only used when a
/// SolverConfig explicitly switches dealiasing off.
SpectralField aliased_product(const SpectralField& F, const SpectralField& G);

}  // namespace rbenj

#endif
