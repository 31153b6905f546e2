#include "rbenj/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace rbenj {

namespace detail {

namespace {
struct PlanCache {
    std::mutex mtx;
    std::map<std::pair<int, int>, fftw_plan> plans;
    ~PlanCache() {
        for (auto& [key, p] : plans) fftw_destroy_plan(p);
    }
};
PlanCache& cache() {
    static PlanCache c;
    return c;
}
}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in,
                                      int sign) {
    const int n = static_cast<int>(in.size());
    std::vector<std::complex<double>> buf(in), out(n);
    fftw_plan plan;
    {
        auto& c = cache();
        std::lock_guard lock(c.mtx);
        auto key = std::make_pair(n, sign);
        auto it = c.plans.find(key);
        if (it == c.plans.end()) {
            // FFTW_UNALIGNED so the plan is reusable on std::vector storage.
            std::vector<std::complex<double>> tmp_in(n), tmp_out(n);
            plan = fftw_plan_dft_1d(
                n, reinterpret_cast<fftw_complex*>(tmp_in.data()),
                reinterpret_cast<fftw_complex*>(tmp_out.data()),
                sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                FFTW_ESTIMATE | FFTW_UNALIGNED);
            c.plans.emplace(key, plan);
        } else {
            plan = it->second;
        }
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

}  // namespace detail

SpectralField forward_transform(const RealField& f) {
    const PeriodicGrid& g = f.grid();
    const int n = g.n_points();
    std::vector<std::complex<double>> in(n);
    for (int j = 0; j < n; ++j) in[j] = f[j];
    auto spec = detail::dft(in, -1);

    // x_j = -pi + 2pi j/n, so f_hat(k) = (-1)^k / n * DFT_k.
    SpectralField F(g);
    for (int k = -g.mode_cutoff(); k <= g.mode_cutoff(); ++k) {
        int idx = (k + n) % n;
        double sgn = (k & 1) ? -1.0 : 1.0;
        F.at(k) = sgn * spec[idx] / static_cast<double>(n);
    }
    F.symmetrize();
    return F;
}

RealField inverse_transform(const SpectralField& F, double symmetry_tol) {
    const PeriodicGrid& g = F.grid();
    if (F.symmetry_defect() > symmetry_tol)
        throw std::invalid_argument(
            "inverse_transform: coefficients are not conjugate-symmetric");
    const int n = g.n_points();
    std::vector<std::complex<double>> spec(n, {0.0, 0.0});
    for (int k = -g.mode_cutoff(); k <= g.mode_cutoff(); ++k) {
        int idx = (k + n) % n;
        double sgn = (k & 1) ? -1.0 : 1.0;
        spec[idx] = sgn * F.coeff(k);
    }
    auto vals = detail::dft(spec, +1);
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = vals[j].real();
    return RealField(g, std::move(out));
}

double sobolev_norm(const SpectralField& F, double s) {
    double sum = 0.0;
    for (int k = -F.cutoff(); k <= F.cutoff(); ++k) {
        double w = std::pow(1.0 + static_cast<double>(k) * k, s);
        sum += w * std::norm(F.coeff(k));
    }
    return std::sqrt(sum);
}

std::complex<double> sobolev_inner(const SpectralField& F, const SpectralField& G,
                                   double s) {
    F.check_same_grid(G);
    std::complex<double> sum{0.0, 0.0};
    for (int k = -F.cutoff(); k <= F.cutoff(); ++k) {
        double w = std::pow(1.0 + static_cast<double>(k) * k, s);
        sum += w * F.coeff(k) * std::conj(G.coeff(k));
    }
    return sum;
}

SpectralField dealiased_product(const SpectralField& F, const SpectralField& G) {
    F.check_same_grid(G);
    const PeriodicGrid& g = F.grid();
    const int m = 2 * g.n_points();  // max product mode n-2 < m/2: exact

    auto pad = [&](const SpectralField& X) {
        std::vector<std::complex<double>> spec(m, {0.0, 0.0});
        for (int k = -X.cutoff(); k <= X.cutoff(); ++k)
            spec[(k + m) % m] = X.coeff(k);
        return detail::dft(spec, +1);
    };
    auto fv = pad(F), gv = pad(G);
    for (int j = 0; j < m; ++j) fv[j] *= gv[j];
    auto spec = detail::dft(fv, -1);

    SpectralField P(g);
    for (int k = -g.mode_cutoff(); k <= g.mode_cutoff(); ++k)
        P.at(k) = spec[(k + m) % m] / static_cast<double>(m);
    return P;
}

SpectralField aliased_product(const SpectralField& F, const SpectralField& G) {
    F.check_same_grid(G);
    const PeriodicGrid& g = F.grid();
    const int n = g.n_points();

    auto synth = [&](const SpectralField& X) {
        std::vector<std::complex<double>> spec(n, {0.0, 0.0});
        for (int k = -X.cutoff(); k <= X.cutoff(); ++k) spec[(k + n) % n] = X.coeff(k);
        return detail::dft(spec, +1);
    };
    auto fv = synth(F), gv = synth(G);
    for (int j = 0; j < n; ++j) fv[j] *= gv[j];
    auto spec = detail::dft(fv, -1);

    SpectralField P(g);
    for (int k = -g.mode_cutoff(); k <= g.mode_cutoff(); ++k)
        P.at(k) = spec[(k + n) % n] / static_cast<double>(n);
    return P;
}

}  // namespace rbenj
