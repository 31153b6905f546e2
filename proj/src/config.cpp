#include "rbenj/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rbenj/io.hpp"
#include "rbenj/random_field.hpp"

namespace rbenj {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw std::invalid_argument("config key '" + key + "': " + what);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        fail(key, "expected a number, got '" + v + "'");
    }
}

long to_long(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        fail(key, "expected an integer, got '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    fail(key, "expected a boolean, got '" + v + "'");
}

// name(arg1,arg2,...) -> {name, args}
std::pair<std::string, std::vector<std::string>> parse_call(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        return {trim(text), {}};
    std::string name = trim(text.substr(0, open));
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::vector<std::string> args;
    std::stringstream ss(inner);
    std::string piece;
    while (std::getline(ss, piece, ',')) args.push_back(trim(piece));
    return {name, args};
}

}  // namespace

InitialConditionSpec InitialConditionSpec::parse(const std::string& text) {
    auto [name, args] = parse_call(trim(text));
    InitialConditionSpec spec;
    auto need = [&](size_t n) {
        if (args.size() != n)
            fail("ic", name + " takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "cosine") {
        need(2);
        spec.kind = Kind::Cosine;
        spec.amplitude = to_double("ic", args[0]);
        spec.wavenumber = static_cast<int>(to_long("ic", args[1]));
        if (spec.wavenumber < 0) fail("ic", "cosine wavenumber must be >= 0");
    } else if (name == "gaussian") {
        need(2);
        spec.kind = Kind::GaussianPeriodic;
        spec.amplitude = to_double("ic", args[0]);
        spec.width = to_double("ic", args[1]);
        if (!(spec.width > 0)) fail("ic", "gaussian width must be > 0");
    } else if (name == "random_sobolev") {
        need(3);
        spec.kind = Kind::RandomSobolev;
        spec.s = to_double("ic", args[0]);
        spec.norm = to_double("ic", args[1]);
        spec.seed = static_cast<std::uint64_t>(to_long("ic", args[2]));
        if (!(spec.norm > 0)) fail("ic", "random_sobolev norm must be > 0");
    } else if (name == "coeff_file") {
        need(1);
        spec.kind = Kind::CoeffFile;
        spec.path = args[0];
    } else {
        fail("ic", "unknown initial-condition kind '" + name + "'");
    }
    return spec;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        if (!seen.insert(key).second) fail(key, "duplicate key");
        cfg.entries.emplace_back(key, val);

        if (key == "alpha") cfg.params.alpha = to_double(key, val);
        else if (key == "a") cfg.params.a = to_double(key, val);
        else if (key == "b") cfg.params.b = to_double(key, val);
        else if (key == "h") cfg.params.h = to_double(key, val);
        else if (key == "allow_zero_b") cfg.params.allow_zero_b = to_bool(key, val);
        else if (key == "operator") {
            if (val == "hilbert") cfg.params.op = DispersionOperator::Hilbert;
            else if (val == "strip") cfg.params.op = DispersionOperator::Strip;
            else fail(key, "expected 'hilbert' or 'strip'");
        } else if (key == "n_points") {
            cfg.n_points = static_cast<int>(to_long(key, val));
        } else if (key == "method") {
            if (val == "rk4") cfg.solver.method = Stepper::Rk4;
            else if (val == "picard") cfg.solver.method = Stepper::PicardDuhamel;
            else fail(key, "expected 'rk4' or 'picard'");
        } else if (key == "dt") cfg.solver.dt = to_double(key, val);
        else if (key == "t_end") cfg.solver.t_end = to_double(key, val);
        else if (key == "picard_tol") cfg.solver.picard_tol = to_double(key, val);
        else if (key == "picard_max_iter")
            cfg.solver.picard_max_iter = static_cast<int>(to_long(key, val));
        else if (key == "quad_substeps")
            cfg.solver.quad_substeps = static_cast<int>(to_long(key, val));
        else if (key == "dealias") cfg.solver.dealias = to_bool(key, val);
        else if (key == "diagnostics_every")
            cfg.solver.diagnostics_every = static_cast<int>(to_long(key, val));
        else if (key == "sobolev_s") cfg.solver.sobolev_s = to_double(key, val);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_long(key, val));
        else if (key == "output_dir") cfg.output_dir = val;
        else if (key == "ic") cfg.ic = InitialConditionSpec::parse(val);
        else fail(key, "unknown key");
    }

    for (const char* req : {"alpha", "a", "b", "operator", "n_points", "dt",
                            "t_end", "ic"})
        if (!seen.count(req)) fail(req, "required key is missing");
    if (cfg.params.op == DispersionOperator::Strip && !seen.count("h"))
        fail("h", "required when operator = strip");

    if (!(cfg.params.alpha > 0.0))
        fail("alpha", "must be > 0 (the model constants are positive)");
    try {
        cfg.params.validate();
        cfg.solver.validate();
        PeriodicGrid probe(cfg.n_points);  // power-of-two check
        (void)probe;
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

SpectralField build_initial_condition(const InitialConditionSpec& spec,
                                      const PeriodicGrid& grid) {
    using Kind = InitialConditionSpec::Kind;
    SpectralField F(grid);
    switch (spec.kind) {
        case Kind::Cosine: {
            if (spec.wavenumber > grid.mode_cutoff())
                throw std::invalid_argument("ic: cosine wavenumber above cutoff");
            if (spec.wavenumber == 0) {
                F.at(0) = spec.amplitude;
            } else {
                F.at(spec.wavenumber) = 0.5 * spec.amplitude;
                F.at(-spec.wavenumber) = 0.5 * spec.amplitude;
            }
            return F;
        }
        case Kind::GaussianPeriodic: {
            // Periodized Gaussian A exp(-x^2/(2w^2)) has coefficients
            // A w exp(-k^2 w^2 / 2) / sqrt(2 pi).
            double pref = spec.amplitude * spec.width / std::sqrt(2.0 * M_PI);
            for (int k = -grid.mode_cutoff(); k <= grid.mode_cutoff(); ++k)
                F.at(k) = pref * std::exp(-0.5 * spec.width * spec.width * k * k);
            return F;
        }
        case Kind::RandomSobolev:
            return random_sobolev_field(grid, spec.s, spec.norm, spec.seed);
        case Kind::CoeffFile:
            return read_snapshot_csv(spec.path, grid);
    }
    throw std::logic_error("unreachable");
}

}  // namespace rbenj
