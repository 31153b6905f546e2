#include "rbenj/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "rbenj/random_field.hpp"

namespace rbenj {

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be > 0");
    if (!(picard_tol > 0.0))
        throw std::invalid_argument("SolverConfig: picard_tol must be > 0");
    if (picard_max_iter < 1)
        throw std::invalid_argument("SolverConfig: picard_max_iter must be >= 1");
    if (quad_substeps < 2)
        throw std::invalid_argument("SolverConfig: quad_substeps must be >= 2");
    if (diagnostics_every < 1)
        throw std::invalid_argument("SolverConfig: diagnostics_every must be >= 1");
}

SpectralField rhs_full(const SpectralField& F, const SymbolTable& table,
                       bool dealias) {
    const double c = 0.75 * table.params().alpha;
    SpectralField sq = dealias ? dealiased_product(F, F) : aliased_product(F, F);
    return apply_generator(F - c * sq, table);
}

SpectralField rhs_coupled(const SpectralField& W, const SpectralField& u_t,
                          const SymbolTable& table, bool dealias) {
    W.check_same_grid(u_t);
    const double c = 0.75 * table.params().alpha;
    auto prod = dealias ? dealiased_product : aliased_product;
    return apply_generator(W - c * (prod(u_t, W) + prod(W, W)), table);
}

SpectralField step_rk4(const SpectralField& F, double t, double dt, const RhsFn& rhs) {
    SpectralField k1 = rhs(t, F);
    SpectralField k2 = rhs(t + 0.5 * dt, F + (0.5 * dt) * k1);
    SpectralField k3 = rhs(t + 0.5 * dt, F + (0.5 * dt) * k2);
    SpectralField k4 = rhs(t + dt, F + dt * k3);
    return F + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

SpectralField step_picard_duhamel(const SpectralField& F, double dt,
                                  const SymbolTable& table, const SolverConfig& cfg) {
    const double c = 0.75 * table.params().alpha;
    const int q = cfg.quad_substeps;
    const double h = dt / q;

    // Phases for all node offsets j*h, j = 0..q.
    std::vector<PropagatorTable> phases;
    phases.reserve(q + 1);
    for (int j = 0; j <= q; ++j) phases.emplace_back(table, j * h);

    auto propagate = [&](const SpectralField& X, int j) {
        SpectralField out(X.grid());
        const auto& ph = phases[j];
        for (int k = -X.cutoff(); k <= X.cutoff(); ++k)
            out.at(k) = ph.phase(k) * X.coeff(k);
        return out;
    };

    // Linear part S(tau_i) F, fixed across iterations.
    std::vector<SpectralField> linear;
    linear.reserve(q + 1);
    for (int i = 0; i <= q; ++i) linear.push_back(propagate(F, i));

    std::vector<SpectralField> v = linear;  // zeroth iterate
    double prev_dist = -1.0;
    int growing = 0;

    for (int iter = 0; iter < cfg.picard_max_iter; ++iter) {
        // g_l = A_j v^2(tau_l) at every node.
        std::vector<SpectralField> g;
        g.reserve(q + 1);
        for (int l = 0; l <= q; ++l) {
            SpectralField sq = cfg.dealias ? dealiased_product(v[l], v[l])
                                           : aliased_product(v[l], v[l]);
            g.push_back(apply_generator(sq, table));
        }

        std::vector<SpectralField> vnew;
        vnew.reserve(q + 1);
        double dist = 0.0;
        for (int i = 0; i <= q; ++i) {
            SpectralField integral(F.grid());
            if (i > 0) {
                integral += 0.5 * propagate(g[0], i);
                for (int l = 1; l < i; ++l) integral += propagate(g[l], i - l);
                integral += 0.5 * g[i];
                integral *= h;
            }
            SpectralField next = linear[i] - c * integral;
            dist = std::max(dist, sobolev_norm(next - v[i], 1.0));
            vnew.push_back(std::move(next));
        }
        v = std::move(vnew);

        if (dist < cfg.picard_tol) return v[q];
        if (prev_dist >= 0.0) {
            growing = dist > prev_dist ? growing + 1 : 0;
            if (growing >= 3) throw NonContractionError(dist / prev_dist);
        }
        prev_dist = dist;
    }
    throw NonContractionError(prev_dist < 0 ? 0.0 : 1.0);
}

namespace {

Trajectory integrate(const SpectralField& y0, const SymbolTable& table,
                     const SolverConfig& cfg, const RhsFn& rhs) {
    cfg.validate();
    const double dt = cfg.t_end >= 0 ? cfg.dt : -cfg.dt;
    const long n_steps = std::lround(cfg.t_end / dt);
    if (std::abs(n_steps * dt - cfg.t_end) > 1e-9 * std::max(1.0, std::abs(cfg.t_end)))
        throw std::invalid_argument("SolverConfig: t_end must be a multiple of dt");

    if (cfg.method == Stepper::PicardDuhamel) {
        // Contraction guard: dt < T'/2 with the empirical bilinear constant.
        double C = estimate_bilinear_constant(cfg.sobolev_s, cfg.sobolev_s, 32,
                                              y0.grid(), table.params());
        double Tp = estimate_local_time(sobolev_norm(y0, cfg.sobolev_s), C,
                                        table.params().alpha);
        if (!(std::abs(dt) < Tp / 2))
            throw std::invalid_argument(
                "SolverConfig: Picard step size violates dt < T'/2");
    }

    Trajectory traj;
    auto record = [&](double t, const SpectralField& y) {
        traj.times.push_back(t);
        traj.states.push_back(y);
        traj.records.push_back(diagnostics(y, table, cfg.sobolev_s, t));
    };

    SpectralField y = y0;
    record(0.0, y);
    for (long i = 0; i < n_steps; ++i) {
        double t = i * dt;
        if (cfg.method == Stepper::Rk4)
            y = step_rk4(y, t, dt, rhs);
        else
            y = step_picard_duhamel(y, dt, table, cfg);
        if (!y.all_finite()) throw BlowUpError(t + dt);
        if ((i + 1) % cfg.diagnostics_every == 0 || i + 1 == n_steps)
            record((i + 1) * dt, y);
    }
    return traj;
}

}  // namespace

Trajectory solve(const SpectralField& eta0, const SymbolTable& table,
                 const SolverConfig& cfg) {
    if (eta0.symmetry_defect() > 1e-8)
        throw std::invalid_argument("solve: initial data is not real-symmetric");
    return integrate(eta0, table, cfg, [&](double, const SpectralField& y) {
        return rhs_full(y, table, cfg.dealias);
    });
}

ForcingField ForcingField::from_trajectory(Trajectory traj) {
    auto data = std::make_shared<Trajectory>(std::move(traj));
    return ForcingField([data](double t) {
        const auto& ts = data->times;
        if (ts.empty()) throw std::invalid_argument("ForcingField: empty trajectory");
        if (ts.size() == 1) return data->states[0];
        double lo = std::min(ts.front(), ts.back());
        double hi = std::max(ts.front(), ts.back());
        if (t < lo - 1e-12 || t > hi + 1e-12)
            throw std::out_of_range("ForcingField: time outside validity interval");

        // 4-point Lagrange cubic on the neighboring snapshots.
        auto it = std::lower_bound(ts.begin(), ts.end(), t);
        long i = std::clamp<long>(it - ts.begin() - 1, 0,
                                  static_cast<long>(ts.size()) - 2);
        long first = std::clamp<long>(i - 1, 0, static_cast<long>(ts.size()) - 4);
        long n_pts = std::min<long>(4, ts.size());

        SpectralField out(data->states[0].grid());
        for (long a = first; a < first + n_pts; ++a) {
            double w = 1.0;
            for (long b = first; b < first + n_pts; ++b)
                if (b != a) w *= (t - ts[b]) / (ts[a] - ts[b]);
            out += w * data->states[a];
        }
        return out;
    });
}

Trajectory solve_coupled(const SpectralField& w0, const ForcingField& u,
                         const SymbolTable& table, const SolverConfig& cfg) {
    if (cfg.method != Stepper::Rk4)
        throw std::invalid_argument("solve_coupled: only the RK4 stepper is supported");
    return integrate(w0, table, cfg, [&](double t, const SpectralField& w) {
        return rhs_coupled(w, u(t), table, cfg.dealias);
    });
}

double estimate_local_time(double norm_s, double C, double alpha) {
    if (norm_s == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 / (3.0 * alpha * C * (2.0 * norm_s));
}

double estimate_bilinear_constant(double s, double r, int trials,
                                  const PeriodicGrid& grid, const ModelParams& p,
                                  std::uint64_t seed) {
    if (!(r >= 0.0 && r <= s + 1.0))
        throw std::invalid_argument("estimate_bilinear_constant: need 0 <= r <= s+1");
    SymbolTable table(grid, p);
    std::mt19937_64 rng(seed);
    // Half-bandwidth samples keep the dealiased product equal to the true one.
    const int band = grid.mode_cutoff() / 2;
    double max_ratio = 0.0;
    for (int i = 0; i < trials; ++i) {
        SpectralField u = random_sobolev_field(grid, s, 1.0, rng, band);
        SpectralField v = random_sobolev_field(grid, r, 1.0, rng, band);
        SpectralField Auv = apply_generator(dealiased_product(u, v), table);
        max_ratio = std::max(max_ratio, sobolev_norm(Auv, r));
    }
    return 2.0 * max_ratio;
}

}  // namespace rbenj
