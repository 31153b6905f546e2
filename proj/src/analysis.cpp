#include "rbenj/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "rbenj/random_field.hpp"

namespace rbenj {

std::pair<double, double> norm_equivalence_constants(const ModelParams& p,
                                                     const PeriodicGrid& grid) {
    p.validate();
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int k = 0; k <= grid.mode_cutoff(); ++k) {
        double rho = m_symbol(k, p) / (1.0 + static_cast<double>(k) * k);
        lo = std::min(lo, rho);
        hi = std::max(hi, rho);
    }
    return {std::min(lo, p.a / 2.0), std::max(hi, 1.5 * p.a)};
}

std::pair<SpectralField, SpectralField> frequency_split(const SpectralField& F,
                                                        int N) {
    if (N < 0 || N > F.cutoff())
        throw std::invalid_argument("frequency_split: cutoff out of range");
    SpectralField low(F.grid()), high(F.grid());
    for (int k = -F.cutoff(); k <= F.cutoff(); ++k)
        (std::abs(k) <= N ? low : high).at(k) = F.coeff(k);
    return {low, high};
}

std::pair<Trajectory, Trajectory> solve_split_joint(const SpectralField& v0,
                                                    const SpectralField& w0,
                                                    const SymbolTable& table,
                                                    const SolverConfig& cfg) {
    cfg.validate();
    if (cfg.method != Stepper::Rk4)
        throw std::invalid_argument("solve_split_joint: RK4 only");
    const double dt = cfg.t_end >= 0 ? cfg.dt : -cfg.dt;
    const long n_steps = std::lround(cfg.t_end / dt);

    Trajectory tv, tw;
    auto record = [&](double t, const SpectralField& v, const SpectralField& w) {
        tv.times.push_back(t);
        tv.states.push_back(v);
        tv.records.push_back(diagnostics(v, table, cfg.sobolev_s, t));
        tw.times.push_back(t);
        tw.states.push_back(w);
        tw.records.push_back(diagnostics(w, table, cfg.sobolev_s, t));
    };

    SpectralField v = v0, w = w0;
    record(0.0, v, w);
    for (long i = 0; i < n_steps; ++i) {
        // Shared stages: the w stage sees u = 2 * (v at the same stage), so
        // v + w reproduces the stages of the direct solve on v0 + w0.
        auto stage = [&](const SpectralField& vs, const SpectralField& ws) {
            return std::make_pair(rhs_full(vs, table, cfg.dealias),
                                  rhs_coupled(ws, 2.0 * vs, table, cfg.dealias));
        };
        auto [kv1, kw1] = stage(v, w);
        auto [kv2, kw2] = stage(v + (0.5 * dt) * kv1, w + (0.5 * dt) * kw1);
        auto [kv3, kw3] = stage(v + (0.5 * dt) * kv2, w + (0.5 * dt) * kw2);
        auto [kv4, kw4] = stage(v + dt * kv3, w + dt * kw3);
        v += (dt / 6.0) * (kv1 + 2.0 * kv2 + 2.0 * kv3 + kv4);
        w += (dt / 6.0) * (kw1 + 2.0 * kw2 + 2.0 * kw3 + kw4);
        if (!v.all_finite() || !w.all_finite()) throw BlowUpError((i + 1) * dt);
        if ((i + 1) % cfg.diagnostics_every == 0 || i + 1 == n_steps)
            record((i + 1) * dt, v, w);
    }
    return {std::move(tv), std::move(tw)};
}

SplitReport split_experiment(const SpectralField& eta0, int N,
                             const SymbolTable& table, const SolverConfig& cfg) {
    auto [low, high] = frequency_split(eta0, N);

    SplitReport rep;
    rep.cutoff_n = N;
    rep.low_norm_s = sobolev_norm(low, cfg.sobolev_s);
    rep.high_norm_s = sobolev_norm(high, cfg.sobolev_s);
    for (int n = 0; n <= eta0.cutoff(); ++n)
        rep.tail_norms.push_back(
            sobolev_norm(frequency_split(eta0, n).second, cfg.sobolev_s));

    Trajectory ref = solve(eta0, table, cfg);
    auto [vtraj, wtraj] = solve_split_joint(high, low, table, cfg);

    rep.times = ref.times;
    for (size_t i = 0; i < ref.times.size(); ++i)
        rep.reconstruction_error.push_back(
            sobolev_norm(vtraj.states[i] + wtraj.states[i] - ref.states[i], 1.0));
    rep.reference_records = std::move(ref.records);
    rep.high_records = std::move(vtraj.records);
    rep.low_records = std::move(wtraj.records);
    return rep;
}

namespace {

// Path p(t) = c0 + t c1 + t^2 c2 in H^s, a contraction-ball candidate.
struct PolyPath {
    std::vector<SpectralField> coef;

    SpectralField eval(double t) const {
        SpectralField out = coef[0];
        double tp = 1.0;
        for (size_t i = 1; i < coef.size(); ++i) {
            tp *= t;
            out += tp * coef[i];
        }
        return out;
    }
};

// Duhamel map J applied to a path, evaluated at time t by composite
// trapezoid with `nq` subintervals and exact per-node propagation.
SpectralField duhamel_map(const SpectralField& eta0, const PolyPath& p, double t,
                          const SymbolTable& table, int nq) {
    const double c = 0.75 * table.params().alpha;
    SpectralField integral(eta0.grid());
    if (t != 0.0) {
        const double h = t / nq;
        for (int l = 0; l <= nq; ++l) {
            double tl = l * h;
            SpectralField g = apply_generator(
                dealiased_product(p.eval(tl), p.eval(tl)), table);
            double w = (l == 0 || l == nq) ? 0.5 : 1.0;
            integral += (w * h) * linear_propagate(g, t - tl, table);
        }
    }
    return linear_propagate(eta0, t, table) - c * integral;
}

}  // namespace

ProbeReport contraction_probe(const SpectralField& eta0, double T, int trials,
                              const SymbolTable& table, double s,
                              std::uint64_t seed) {
    const PeriodicGrid& grid = eta0.grid();
    const ModelParams& p = table.params();
    const double M = 2.0 * sobolev_norm(eta0, s);
    const double C = estimate_bilinear_constant(s, s, 32, grid, p, seed + 1);
    const double Tp = estimate_local_time(sobolev_norm(eta0, s), C, p.alpha);
    if (!(T < Tp))
        throw std::invalid_argument("contraction_probe: requires T < T'");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.2, 1.0);

    const int n_t = 9, nq = 16;
    std::vector<double> sample_times;
    for (int i = 0; i < n_t; ++i)
        sample_times.push_back(-T + 2.0 * T * i / (n_t - 1));

    auto draw_path = [&](bool constant) {
        PolyPath path;
        int degree = constant ? 0 : 2;
        for (int d = 0; d <= degree; ++d)
            path.coef.push_back(random_sobolev_field(grid, s, 1.0, rng,
                                                     grid.mode_cutoff() / 2));
        double sup = 0.0;
        for (double t : sample_times)
            sup = std::max(sup, sobolev_norm(path.eval(t), s));
        double scale = unif(rng) * M / sup;
        for (auto& f : path.coef) f *= scale;
        return path;
    };

    double max_ratio = 0.0;
    std::vector<double> ratios;
    for (int i = 0; i < trials; ++i) {
        PolyPath u = draw_path(i % 2 == 0);
        PolyPath v = draw_path(i % 2 == 0);
        double num = 0.0, den = 0.0;
        for (double t : sample_times) {
            num = std::max(num, sobolev_norm(duhamel_map(eta0, u, t, table, nq) -
                                                 duhamel_map(eta0, v, t, table, nq),
                                             s));
            den = std::max(den, sobolev_norm(u.eval(t) - v.eval(t), s));
        }
        if (den == 0.0) continue;  // u == v excluded
        ratios.push_back(num / den);
        max_ratio = std::max(max_ratio, num / den);
    }

    ProbeReport rep;
    rep.probe = "contraction";
    rep.seed = seed;
    rep.constants = {{"C_ss", C}, {"T", T}, {"T_prime", Tp},
                     {"q_T", T / Tp},  {"M", M}};
    rep.series.emplace_back("ratio", std::move(ratios));
    rep.assertions.push_back(
        {"max_ratio < 1", max_ratio < 1.0, max_ratio, 1.0});
    double bound = (T / Tp) * 1.001;  // quadrature slack
    rep.assertions.push_back(
        {"max_ratio < q_T * (1 + 1e-3)", max_ratio < bound, max_ratio, bound});
    return rep;
}

ProbeReport continuity_probe(const SpectralField& eta0,
                             const std::vector<double>& epsilons, double t_end,
                             const SymbolTable& table, const SolverConfig& cfg,
                             std::uint64_t seed) {
    SolverConfig run = cfg;
    run.t_end = t_end;
    Trajectory ref = solve(eta0, table, run);

    double m_star = 0.0;
    for (const auto& r : ref.records) m_star = std::max(m_star, r.norm_s);
    const double C = estimate_bilinear_constant(cfg.sobolev_s, cfg.sobolev_s, 32,
                                                eta0.grid(), table.params(), seed + 1);
    const double alpha = table.params().alpha;
    const double K2 = 1.5 * alpha * C * m_star;
    const double K3 = 0.75 * alpha * C;

    SpectralField delta =
        random_sobolev_field(eta0.grid(), cfg.sobolev_s, 1.0, seed);

    ProbeReport rep;
    rep.probe = "continuity";
    rep.seed = seed;
    rep.constants = {{"C_ss", C}, {"K2", K2}, {"K3", K3}, {"M_star", m_star}};
    rep.series.emplace_back("t", ref.times);

    for (double eps : epsilons) {
        Trajectory pert = solve(eta0 + eps * delta, table, run);
        double d0 = sobolev_norm(pert.states[0] - ref.states[0], cfg.sobolev_s);

        // Envelope validity window (the t < T*_n condition); unbounded for
        // zero perturbation.
        double t_valid = d0 > 0.0 ? std::log1p(K2 / (K3 * d0)) / K2
                                  : std::numeric_limits<double>::infinity();
        bool valid = t_end < t_valid;
        rep.assertions.push_back({"envelope_valid eps=" + std::to_string(eps),
                                  valid, t_end, t_valid});

        std::vector<double> div, env;
        bool under = true;
        double worst = 0.0;
        for (size_t i = 0; i < ref.times.size(); ++i) {
            double t = std::abs(ref.times[i]);
            double d = sobolev_norm(pert.states[i] - ref.states[i], cfg.sobolev_s);
            double e = K2 * d0 * std::exp(K2 * t) /
                       (K2 + K3 * d0 * (1.0 - std::exp(K2 * t)));
            div.push_back(d);
            env.push_back(e);
            if (valid && d > e) under = false;
            worst = std::max(worst, e > 0 ? d / e : (d == 0.0 ? 0.0 : 1e300));
        }
        rep.series.emplace_back("divergence eps=" + std::to_string(eps), div);
        rep.series.emplace_back("envelope eps=" + std::to_string(eps), env);
        rep.assertions.push_back({"divergence(0) == eps (1e-12) eps=" +
                                      std::to_string(eps),
                                  std::abs(d0 - eps) <= 1e-12 * std::max(1.0, eps),
                                  d0, eps});
        if (valid)
            rep.assertions.push_back({"under envelope eps=" + std::to_string(eps),
                                      under, worst, 1.0});
    }
    return rep;
}

ProbeReport convergence_study(
    const std::function<SpectralField(const PeriodicGrid&)>& ic,
    const ModelParams& p, const SolverConfig& base, const std::vector<double>& dts,
    const std::vector<int>& grids) {
    if (dts.empty() || grids.empty())
        throw std::invalid_argument("convergence_study: empty sweep");

    ProbeReport rep;
    rep.probe = "convergence";

    // Temporal: fixed grid, Richardson against a much finer reference.
    {
        PeriodicGrid grid(grids.front());
        SymbolTable table(grid, p);
        SpectralField eta0 = ic(grid);
        double dt_ref = *std::min_element(dts.begin(), dts.end()) / 8.0;
        SolverConfig cfg = base;
        cfg.dt = dt_ref;
        cfg.diagnostics_every = 1 << 20;
        SpectralField ref = solve(eta0, table, cfg).final_state();

        std::vector<double> errs;
        for (double dt : dts) {
            cfg.dt = dt;
            errs.push_back(
                sobolev_norm(solve(eta0, table, cfg).final_state() - ref, 1.0));
        }
        std::vector<double> orders;
        for (size_t i = 0; i + 1 < dts.size(); ++i)
            orders.push_back(std::log(errs[i] / errs[i + 1]) /
                             std::log(dts[i] / dts[i + 1]));
        rep.series.emplace_back("dt", dts);
        rep.series.emplace_back("temporal_error", errs);
        rep.series.emplace_back("temporal_order", orders);
        if (!orders.empty())
            rep.constants["temporal_order"] = orders.back();
    }

    // Spatial: finest grid is the reference; compare on shared modes.
    {
        int n_ref = *std::max_element(grids.begin(), grids.end());
        PeriodicGrid fine(n_ref);
        SymbolTable table_ref(fine, p);
        SolverConfig cfg = base;
        cfg.dt = *std::min_element(dts.begin(), dts.end());
        cfg.diagnostics_every = 1 << 20;
        SpectralField ref = solve(ic(fine), table_ref, cfg).final_state();

        std::vector<double> ns, errs;
        for (int n : grids) {
            PeriodicGrid g(n);
            SymbolTable table(g, p);
            SpectralField fin = solve(ic(g), table, cfg).final_state();
            double sum = 0.0;
            for (int k = -fine.mode_cutoff(); k <= fine.mode_cutoff(); ++k) {
                double w = 1.0 + static_cast<double>(k) * k;
                sum += w * std::norm(ref.coeff(k) - fin.coeff(k));
            }
            ns.push_back(n);
            errs.push_back(std::sqrt(sum));
        }
        rep.series.emplace_back("n_points", ns);
        rep.series.emplace_back("spatial_error", errs);
    }
    return rep;
}

double estimate_embedding_constant(const PeriodicGrid& grid, int trials,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double max_ratio = 0.0;
    for (int i = 0; i < trials; ++i) {
        SpectralField f = random_sobolev_field(grid, 1.0, 1.0, rng);
        max_ratio = std::max(max_ratio, inverse_transform(f).max_abs());
    }
    return 2.0 * max_ratio;
}

double estimate_square_constant(const PeriodicGrid& grid, double s, int trials,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double max_ratio = 0.0;
    for (int i = 0; i < trials; ++i) {
        SpectralField v =
            random_sobolev_field(grid, s, 1.0, rng, grid.mode_cutoff() / 2);
        double sup = inverse_transform(v).max_abs();
        double ratio = sobolev_norm(dealiased_product(v, v), s) / sup;
        max_ratio = std::max(max_ratio, ratio);
    }
    return 2.0 * max_ratio;
}

}  // namespace rbenj
