#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rbenj/spectral.hpp"
#include "rbenj/symbols.hpp"

using namespace rbenj;

namespace {
ModelParams hilbert_params(double a = 1, double b = 1, double alpha = 1) {
    ModelParams p;
    p.alpha = alpha;
    p.a = a;
    p.b = b;
    p.op = DispersionOperator::Hilbert;
    return p;
}
}  // namespace

TEST_CASE("parameter validation") {
    ModelParams p = hilbert_params();
    CHECK_NOTHROW(p.validate());
    p.a = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.a = 1.0;
    p.b = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.allow_zero_b = true;
    CHECK_NOTHROW(p.validate());
    p.h = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("m symbol values") {
    ModelParams p = hilbert_params();
    CHECK(m_symbol(0, p) == 1.0);
    CHECK(m_symbol(2, p) == 7.0);  // 1 + 2 + 4

    ModelParams strip = p;
    strip.op = DispersionOperator::Strip;
    strip.h = 2.0;
    CHECK(m_symbol(0, strip) == doctest::Approx(1.5).epsilon(1e-14));  // 1 + b/h
}

TEST_CASE("phi symbol values and uniform bound") {
    ModelParams p = hilbert_params();
    CHECK(phi_symbol(0, p) == 0.0);
    CHECK(phi_symbol(2, p) == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
    CHECK(phi_bound(p) == doctest::Approx(1.0 / 3.0));

    ModelParams b0 = hilbert_params(1, 0);
    b0.allow_zero_b = true;
    CHECK(phi_bound(b0) == doctest::Approx(0.5));
    CHECK(phi_bound(hilbert_params(4, 2)) == doctest::Approx(1.0 / 6.0));

    // sup over a wide mode sweep stays under 1/(b + 2 sqrt a)
    double sup = 0.0;
    for (long k = -1000000; k <= 1000000; k += 997)
        sup = std::max(sup, std::abs(phi_symbol(static_cast<double>(k), p)));
    CHECK(sup <= phi_bound(p));
}

TEST_CASE("symbol inequalities over random parameters") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> pos(0.05, 10.0);
    std::uniform_int_distribution<int> mode(-2000, 2000);
    for (int i = 0; i < 5000; ++i) {
        ModelParams p1 = hilbert_params(pos(rng), pos(rng), 1);
        ModelParams p2 = p1;
        p2.op = DispersionOperator::Strip;
        p2.h = pos(rng);
        double k = mode(rng);
        double m1 = m_symbol(k, p1), m2 = m_symbol(k, p2);
        CHECK(m2 >= m1);
        CHECK(m1 >= (p1.b + 2 * std::sqrt(p1.a)) * std::abs(k));
        CHECK(std::abs(phi_symbol(k, p2)) <= std::abs(phi_symbol(k, p1)));
        CHECK(std::abs(phi_symbol(k, p1)) <= phi_bound(p1));
    }
}

TEST_CASE("symbol table invariants") {
    PeriodicGrid g(128);
    ModelParams p = hilbert_params(0.7, 2.3);
    SymbolTable t(g, p);
    for (int k = 0; k <= g.mode_cutoff(); ++k) {
        CHECK(t.m(k) >= 1.0);
        CHECK(t.m(-k) == t.m(k));
        CHECK(t.phi(-k) == -t.phi(k));
    }
    CHECK(t.phi(0) == 0.0);
}

TEST_CASE("Hilbert transform on harmonics") {
    PeriodicGrid g(32);
    SpectralField cosf(g), sinf(g), constf(g);
    cosf.at(1) = 0.5;
    cosf.at(-1) = 0.5;
    sinf.at(1) = {0.0, -0.5};
    sinf.at(-1) = {0.0, 0.5};
    constf.at(0) = 3.0;

    auto hc = inverse_transform(hilbert_transform(cosf));
    auto hs = inverse_transform(hilbert_transform(sinf));
    for (int j = 0; j < g.n_points(); ++j) {
        double x = g.point(j);
        CHECK(hc[j] == doctest::Approx(-std::sin(x)).epsilon(1e-13));
        CHECK(hs[j] == doctest::Approx(std::cos(x)).epsilon(1e-13));
    }
    auto hconst = hilbert_transform(constf);
    for (const auto& c : hconst.raw()) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("strip transform and its Hilbert limit") {
    PeriodicGrid g(32);
    ModelParams p = hilbert_params();
    p.op = DispersionOperator::Strip;
    SpectralField cosf(g);
    cosf.at(1) = 0.5;
    cosf.at(-1) = 0.5;

    p.h = 1.0;
    auto tc = inverse_transform(strip_hilbert_transform(cosf, p));
    double coth1 = 1.0 / std::tanh(1.0);
    for (int j = 0; j < g.n_points(); ++j)
        CHECK(tc[j] == doctest::Approx(-coth1 * std::sin(g.point(j))).epsilon(1e-13));

    p.h = 20.0;
    CHECK(sobolev_norm(strip_hilbert_transform(cosf, p) - hilbert_transform(cosf),
                       0.0) <= 1e-15);

    std::mt19937_64 rng(22);
    auto F = oracle::random_field(g, g.mode_cutoff(), rng);
    F.at(0) = 0.0;  // zero-mean
    CHECK(sobolev_norm(strip_hilbert_transform(F, p) - hilbert_transform(F), 0.0) <=
          1e-12 * sobolev_norm(F, 0.0));
}

TEST_CASE("generator A_j on cos") {
    PeriodicGrid g(32);
    SymbolTable t(g, hilbert_params());
    SpectralField cosf(g);
    cosf.at(1) = 0.5;
    cosf.at(-1) = 0.5;
    // A cos = phi(1) sin x with phi(1) = 1/3 (matches eta_t of the phase
    // shift cos(x - phi(1) t)).
    auto av = inverse_transform(apply_generator(cosf, t));
    for (int j = 0; j < g.n_points(); ++j)
        CHECK(av[j] ==
              doctest::Approx(std::sin(g.point(j)) / 3.0).epsilon(1e-12));

    auto Z = apply_generator(SpectralField(g), t);
    for (const auto& c : Z.raw()) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("smoothing bound ||A f||_{l+1} <= ||f||_l / min(a,1)") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> pos(0.05, 5.0);
    PeriodicGrid g(64);
    for (int i = 0; i < 200; ++i) {
        ModelParams p = hilbert_params(pos(rng), pos(rng));
        if (i % 2) {
            p.op = DispersionOperator::Strip;
            p.h = pos(rng);
        }
        SymbolTable t(g, p);
        auto F = oracle::random_field(g, g.mode_cutoff(), rng);
        double bound = 1.0 / std::min(p.a, 1.0);
        for (double l : {0.0, 1.0})
            CHECK(sobolev_norm(apply_generator(F, t), l + 1.0) <=
                  bound * sobolev_norm(F, l) * (1 + 1e-12));
    }
}

TEST_CASE("triple norm of cos") {
    PeriodicGrid g(32);
    SymbolTable t(g, hilbert_params());
    SpectralField cosf(g);
    cosf.at(1) = 0.5;
    cosf.at(-1) = 0.5;
    // 2 * m(1) * (1/4) = 3/2 with m(1) = 3
    CHECK(triple_norm1(cosf, t) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
}
