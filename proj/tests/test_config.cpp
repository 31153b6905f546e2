#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rbenj/config.hpp"
#include "rbenj/io.hpp"
#include "rbenj/random_field.hpp"

using namespace rbenj;
namespace fs = std::filesystem;

namespace {

const char* kMinimal =
    "alpha = 1\n"
    "a = 1\n"
    "b = 1\n"
    "operator = hilbert\n"
    "n_points = 64\n"
    "dt = 0.001\n"
    "t_end = 1\n"
    "ic = cosine(0.1, 1)\n";

std::string with_line(const std::string& extra) {
    return std::string(kMinimal) + extra + "\n";
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("rbenj_test_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("minimal config parses") {
    auto cfg = parse_config(kMinimal);
    CHECK(cfg.params.alpha == 1.0);
    CHECK(cfg.params.op == DispersionOperator::Hilbert);
    CHECK(cfg.n_points == 64);
    CHECK(cfg.solver.dt == 0.001);
    CHECK(cfg.solver.t_end == 1.0);
    CHECK(cfg.ic.kind == InitialConditionSpec::Kind::Cosine);
    CHECK(cfg.ic.amplitude == 0.1);
    CHECK(cfg.ic.wavenumber == 1);
    CHECK(cfg.entries.size() == 8);
    CHECK(cfg.entries[0].first == "alpha");
}

TEST_CASE("comments, blank lines and optional keys") {
    auto cfg = parse_config(with_line(
        "# a comment\n\nmethod = picard\nseed = 42\ndealias = off"));
    CHECK(cfg.solver.method == Stepper::PicardDuhamel);
    CHECK(cfg.seed == 42);
    CHECK(cfg.solver.dealias == false);
}

TEST_CASE("errors name the offending key") {
    auto expect_fail = [](const std::string& text, const std::string& needle) {
        try {
            parse_config(text);
            FAIL_CHECK("expected a parse error mentioning ", needle);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_fail(with_line("bogus = 1"), "bogus");
    expect_fail(with_line("dt = fast"), "dt");
    expect_fail(with_line("a = 1"), "duplicate");
    // Missing required keys, invalid model constants.
    expect_fail("alpha = 1\n", "required");
    expect_fail(std::string(kMinimal) + "extra\n", "key = value");

    std::string zero_a(kMinimal);
    zero_a.replace(zero_a.find("a = 1"), 5, "a = 0");
    expect_fail(zero_a, "a");

    std::string neg_alpha(kMinimal);
    neg_alpha.replace(neg_alpha.find("alpha = 1"), 9, "alpha = 0");
    expect_fail(neg_alpha, "alpha");

    std::string strip(kMinimal);
    strip.replace(strip.find("operator = hilbert"), 18, "operator = strip");
    expect_fail(strip, "h");
    CHECK_NOTHROW(parse_config(strip + "h = 2\n"));

    std::string odd_n(kMinimal);
    odd_n.replace(odd_n.find("n_points = 64"), 13, "n_points = 65");
    expect_fail(odd_n, "config");
}

TEST_CASE("initial condition specs build the advertised coefficients") {
    PeriodicGrid g(64);

    auto cosf = build_initial_condition(
        InitialConditionSpec::parse("cosine(0.4, 3)"), g);
    CHECK(cosf.coeff(3) == std::complex<double>(0.2, 0.0));
    CHECK(cosf.coeff(-3) == std::complex<double>(0.2, 0.0));
    CHECK(std::abs(cosf.coeff(1)) == 0.0);

    auto mean = build_initial_condition(InitialConditionSpec::parse("cosine(2,0)"), g);
    CHECK(mean.coeff(0) == std::complex<double>(2.0, 0.0));

    auto gauss = build_initial_condition(
        InitialConditionSpec::parse("gaussian(1.0, 0.5)"), g);
    double pref = 0.5 / std::sqrt(2.0 * M_PI);
    CHECK(gauss.coeff(0).real() == doctest::Approx(pref).epsilon(1e-14));
    CHECK(gauss.coeff(4).real() ==
          doctest::Approx(pref * std::exp(-0.5 * 0.25 * 16)).epsilon(1e-14));
    CHECK(gauss.symmetry_defect() == 0.0);

    auto rnd = build_initial_condition(
        InitialConditionSpec::parse("random_sobolev(1.0, 0.7, 9)"), g);
    CHECK(sobolev_norm(rnd, 1.0) == doctest::Approx(0.7).epsilon(1e-12));
    auto rnd2 = build_initial_condition(
        InitialConditionSpec::parse("random_sobolev(1.0, 0.7, 9)"), g);
    for (int k = -rnd.cutoff(); k <= rnd.cutoff(); ++k)
        CHECK(rnd.coeff(k) == rnd2.coeff(k));

    CHECK_THROWS_AS(InitialConditionSpec::parse("square(1)"), std::invalid_argument);
    CHECK_THROWS_AS(InitialConditionSpec::parse("cosine(1)"), std::invalid_argument);
    CHECK_THROWS_AS(
        build_initial_condition(InitialConditionSpec::parse("cosine(1, 99)"), g),
        std::invalid_argument);
}

TEST_CASE("snapshot csv round trip is bit exact") {
    TempDir tmp;
    PeriodicGrid g(64);
    std::mt19937_64 rng(61);
    auto F = oracle::random_field(g, g.mode_cutoff(), rng);
    auto path = (tmp.path / "snap.csv").string();
    write_snapshot_csv(path, F);
    auto back = read_snapshot_csv(path, g);
    for (int k = -F.cutoff(); k <= F.cutoff(); ++k)
        CHECK(back.coeff(k) == F.coeff(k));

    auto missing = (tmp.path / "nope.csv").string();
    CHECK_THROWS_AS(read_snapshot_csv(missing, g), std::invalid_argument);

    // Symmetry violations are rejected on read.
    std::ofstream bad(tmp.path / "bad.csv");
    bad << "k,re,im\n1,1,0\n-1,0.5,0\n";
    bad.close();
    CHECK_THROWS_AS(read_snapshot_csv((tmp.path / "bad.csv").string(), g),
                    std::invalid_argument);
}

TEST_CASE("coeff_file initial condition round trips through the solver") {
    TempDir tmp;
    PeriodicGrid g(64);
    auto F = random_sobolev_field(g, 1.0, 0.5, std::uint64_t{62});
    auto path = (tmp.path / "ic.csv").string();
    write_snapshot_csv(path, F);
    auto spec = InitialConditionSpec::parse("coeff_file(" + path + ")");
    auto built = build_initial_condition(spec, g);
    for (int k = -F.cutoff(); k <= F.cutoff(); ++k)
        CHECK(built.coeff(k) == F.coeff(k));
}

TEST_CASE("trajectory outputs: files, headers, determinism") {
    TempDir tmp;
    auto cfg = parse_config(kMinimal);
    PeriodicGrid g(cfg.n_points);
    SymbolTable table(g, cfg.params);
    auto eta0 = build_initial_condition(cfg.ic, g);
    auto traj = solve(eta0, table, cfg.solver);

    auto run_dir = [&](const std::string& name, double wall) {
        auto dir = (tmp.path / name).string();
        write_trajectory_outputs(traj, cfg, dir, {{"C_ss", 1.25}},
                                 {{"mass drift", true, 0.0, 1e-13}}, wall);
        return dir;
    };
    auto d1 = run_dir("r1", 0.123);
    auto d2 = run_dir("r2", 9.876);  // different wall clock

    auto diag = read_file(fs::path(d1) / "diagnostics.csv");
    CHECK(diag.rfind("t,mass,norm0,norm_half,norm1,norm_s,triple_norm1,sup_norm\n",
                     0) == 0);
    CHECK(fs::exists(fs::path(d1) / "snapshot_0.csv"));
    CHECK(fs::exists(fs::path(d1) / "snapshot_1.csv"));

    auto summary = read_file(fs::path(d1) / "summary.json");
    CHECK(summary.find("\"alpha\": \"1\"") != std::string::npos);
    CHECK(summary.find("C_ss") != std::string::npos);
    CHECK(summary.find("mass drift") != std::string::npos);

    // Outputs other than timing.txt are byte-identical across runs.
    CHECK(read_file(fs::path(d1) / "diagnostics.csv") ==
          read_file(fs::path(d2) / "diagnostics.csv"));
    CHECK(read_file(fs::path(d1) / "summary.json") ==
          read_file(fs::path(d2) / "summary.json"));
    CHECK(read_file(fs::path(d1) / "snapshot_1.csv") ==
          read_file(fs::path(d2) / "snapshot_1.csv"));
    CHECK(read_file(fs::path(d1) / "timing.txt") !=
          read_file(fs::path(d2) / "timing.txt"));
}

TEST_CASE("probe report output") {
    TempDir tmp;
    auto cfg = parse_config(kMinimal);
    ProbeReport rep;
    rep.probe = "demo";
    rep.seed = 7;
    rep.constants["K"] = 2.5;
    rep.series.emplace_back("x", std::vector<double>{1, 2, 3});
    rep.series.emplace_back("y", std::vector<double>{4, 5});  // ragged
    rep.assertions.push_back({"x positive", true, 1.0, 0.0});

    auto dir = (tmp.path / "probe").string();
    write_probe_report(rep, cfg, dir, 0.5);
    auto csv = read_file(fs::path(dir) / "report.csv");
    CHECK(csv.rfind("x,y\n1,4\n2,5\n3,\n", 0) == 0);
    auto summary = read_file(fs::path(dir) / "summary.json");
    CHECK(summary.find("\"probe\": \"demo\"") != std::string::npos);
    CHECK(summary.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("format_full is lossless") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 12345.6789, 0.0}) {
        CHECK(std::stod(format_full(x)) == x);
    }
}
