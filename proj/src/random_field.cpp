#include "rbenj/random_field.hpp"

#include <cmath>
#include <stdexcept>

namespace rbenj {

SpectralField random_sobolev_field(const PeriodicGrid& grid, double s, double norm,
                                   std::mt19937_64& rng, int max_mode) {
    if (max_mode < 0 || max_mode > grid.mode_cutoff()) max_mode = grid.mode_cutoff();
    std::normal_distribution<double> gauss(0.0, 1.0);

    SpectralField F(grid);
    F.at(0) = gauss(rng);
    for (int k = 1; k <= max_mode; ++k) {
        double decay = std::pow(1.0 + static_cast<double>(k) * k, -s / 2 - 0.5 - 0.05);
        std::complex<double> c(gauss(rng), gauss(rng));
        F.at(k) = decay * c;
        F.at(-k) = std::conj(F.coeff(k));
    }
    double current = sobolev_norm(F, s);
    if (current == 0.0)
        throw std::logic_error("random_sobolev_field: degenerate draw");
    F *= norm / current;
    return F;
}

}  // namespace rbenj
