#ifndef RBENJ_FIELDS_HPP
#define RBENJ_FIELDS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace rbenj {

/// Uniform collocation grid on [-pi, pi) with n_points a power of two.
/// The Nyquist mode is always dropped: retained wavenumbers are
/// |k| <= mode_cutoff = n_points/2 - 1.
class PeriodicGrid {
  public:
    explicit PeriodicGrid(int n_points) : n_(n_points) {
        if (n_ < 8 || (n_ & (n_ - 1)) != 0)
            throw std::invalid_argument(
                "PeriodicGrid: n_points must be a power of two >= 8");
    }

    int n_points() const { return n_; }
    int mode_cutoff() const { return n_ / 2 - 1; }
    int n_modes() const { return n_ - 1; }  // 2*cutoff + 1
    double spacing() const { return 2.0 * M_PI / n_; }
    double point(int j) const { return -M_PI + 2.0 * M_PI * j / n_; }

    bool operator==(const PeriodicGrid&) const = default;

  private:
    int n_;
};

/// Real samples eta(x_j) at the collocation points.
class RealField {
  public:
    RealField(PeriodicGrid grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != grid_.n_points())
            throw std::invalid_argument("RealField: length mismatch with grid");
        for (double v : values_)
            if (!std::isfinite(v))
                throw std::invalid_argument("RealField: non-finite sample");
    }

    const PeriodicGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](int j) const { return values_[j]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }

  private:
    PeriodicGrid grid_;
    std::vector<double> values_;
};

/// Truncated Fourier coefficients eta_hat(k), k = -cutoff..cutoff, under the
/// convention f_hat(k) = (1/2pi) \int_{-pi}^{pi} f(x) e^{-ikx} dx.
/// Stored densely, index k + cutoff.
class SpectralField {
  public:
    using Complex = std::complex<double>;

    explicit SpectralField(PeriodicGrid grid)
        : grid_(grid), coeffs_(grid.n_modes(), Complex{0.0, 0.0}) {}

    const PeriodicGrid& grid() const { return grid_; }
    int cutoff() const { return grid_.mode_cutoff(); }

    Complex coeff(int k) const {
        if (std::abs(k) > cutoff()) return {0.0, 0.0};
        return coeffs_[k + cutoff()];
    }
    Complex& at(int k) { return coeffs_[k + cutoff()]; }
    const std::vector<Complex>& raw() const { return coeffs_; }
    std::vector<Complex>& raw() { return coeffs_; }

    bool all_finite() const {
        for (const auto& c : coeffs_)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }

    /// Deviation from eta_hat(-k) = conj(eta_hat(k)), relative to max |coeff|.
    double symmetry_defect() const {
        double scale = 0.0, defect = 0.0;
        for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
        if (scale == 0.0) return 0.0;
        for (int k = 0; k <= cutoff(); ++k)
            defect = std::max(defect, std::abs(coeff(-k) - std::conj(coeff(k))));
        return defect / scale;
    }

    /// Restore exact conjugate symmetry by averaging the +-k pair.
    void symmetrize() {
        for (int k = 1; k <= cutoff(); ++k) {
            Complex avg = 0.5 * (coeff(k) + std::conj(coeff(-k)));
            at(k) = avg;
            at(-k) = std::conj(avg);
        }
        at(0) = Complex{at(0).real(), 0.0};
    }

    SpectralField& operator+=(const SpectralField& o) {
        check_same_grid(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        check_same_grid(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    SpectralField& operator*=(double c) {
        for (auto& z : coeffs_) z *= c;
        return *this;
    }

    void check_same_grid(const SpectralField& o) const {
        if (!(grid_ == o.grid_))
            throw std::invalid_argument("SpectralField: grid mismatch");
    }

  private:
    PeriodicGrid grid_;
    std::vector<Complex> coeffs_;
};

inline SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
inline SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
inline SpectralField operator*(double c, SpectralField a) { return a *= c; }
inline SpectralField operator*(SpectralField a, double c) { return a *= c; }

}  // namespace rbenj

#endif
