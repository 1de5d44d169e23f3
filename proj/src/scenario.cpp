#include "nlt/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "nlt/errors.hpp"
#include "nlt/verification.hpp"

namespace nlt {

RunConfig Scenario::to_run_config() const {
    RunConfig cfg;
    const double L = domain_length > 0.0 ? domain_length : 32.0 * std::numbers::pi;
    cfg.grid = make_grid(n_points, L);
    cfg.params = params;
    cfg.initial = initial;
    cfg.t_final = t_final;
    cfg.dt_policy = dt_policy;
    cfg.record_every = record_every;
    cfg.weight = weight;
    cfg.checks = checks.empty() ? known_checks() : checks;
    cfg.fatal_min_max = fatal_min_max;
    cfg.scheme = scheme;
    cfg.form = form;
    cfg.store_fields = store_fields;
    cfg.validate();
    return cfg;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw config_error("config line " + std::to_string(line) + ": " + msg);
}

// Accepts plain numbers and a trailing "pi" multiplier ("32pi", "pi").
double parse_double(const std::string& raw, int line) {
    std::string s = lower(trim(raw));
    double factor = 1.0;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
        factor = std::numbers::pi;
        s = trim(s.substr(0, s.size() - 2));
        if (s.empty()) s = "1";
    }
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) fail(line, "trailing characters in number '" + raw + "'");
        return factor * v;
    } catch (const config_error&) {
        throw;
    } catch (...) {
        fail(line, "cannot parse number '" + raw + "'");
    }
}

bool parse_bool(const std::string& raw, int line) {
    const std::string s = lower(trim(raw));
    if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
    if (s == "false" || s == "no" || s == "0" || s == "off") return false;
    fail(line, "cannot parse boolean '" + raw + "'");
}

std::vector<std::string> split_list(const std::string& raw) {
    std::vector<std::string> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

const std::set<std::string> kSweepKeys = {"epsilon_visc", "n_points", "dt",
                                          "delta",        "gamma",    "alpha"};

void apply_key(Scenario& sc, const std::string& key, const std::string& value, int line) {
    const std::string k = lower(key);
    if (k == "model") {
        const std::string v = lower(trim(value));
        if (v == "hilbert" || v == "a") {
            sc.params.velocity = VelocityKind::hilbert();
        } else if (v == "bessel" || v == "b") {
            sc.params.velocity = VelocityKind::bessel(sc.params.velocity.alpha);
        } else {
            fail(line, "model must be 'hilbert' or 'bessel', got '" + value + "'");
        }
    } else if (k == "gamma") {
        sc.params.gamma = parse_double(value, line);
    } else if (k == "delta") {
        sc.params.delta = parse_double(value, line);
    } else if (k == "nu") {
        sc.params.nu = parse_double(value, line);
    } else if (k == "epsilon_visc") {
        sc.params.epsilon_visc = parse_double(value, line);
    } else if (k == "alpha") {
        sc.params.velocity.alpha = parse_double(value, line);
    } else if (k == "critical_coupling") {
        sc.params.critical_coupling = parse_bool(value, line);
    } else if (k == "n_points") {
        sc.n_points = static_cast<std::size_t>(parse_double(value, line));
    } else if (k == "domain_length") {
        sc.domain_length = parse_double(value, line);
    } else if (k == "t_final") {
        sc.t_final = parse_double(value, line);
    } else if (k == "dt") {
        sc.dt_policy = DtPolicy::fixed(parse_double(value, line));
    } else if (k == "cfl") {
        sc.dt_policy = DtPolicy::cfl(parse_double(value, line));
    } else if (k == "record_every") {
        sc.record_every = static_cast<int>(parse_double(value, line));
    } else if (k == "weight_beta") {
        sc.weight.beta = parse_double(value, line);
    } else if (k == "scheme") {
        const std::string v = lower(trim(value));
        if (v == "rk2") {
            sc.scheme = Scheme::if_rk2;
        } else if (v == "rk4") {
            sc.scheme = Scheme::if_rk4;
        } else {
            fail(line, "scheme must be rk2 or rk4");
        }
    } else if (k == "form") {
        const std::string v = lower(trim(value));
        if (v == "advective") {
            sc.form = RhsForm::advective;
        } else if (v == "divergence") {
            sc.form = RhsForm::divergence;
        } else {
            fail(line, "form must be advective or divergence");
        }
    } else if (k == "store_fields") {
        sc.store_fields = parse_bool(value, line);
    } else if (k == "initial") {
        const std::string v = lower(trim(value));
        if (v == "positive_bump") {
            sc.initial.kind = InitialDataSpec::Kind::positive_bump;
        } else if (v == "gaussian") {
            sc.initial.kind = InitialDataSpec::Kind::gaussian;
        } else if (v == "trig_polynomial") {
            sc.initial.kind = InitialDataSpec::Kind::trig_polynomial;
        } else if (v == "slow_decay") {
            sc.initial.kind = InitialDataSpec::Kind::slow_decay;
        } else {
            fail(line, "unknown initial data kind '" + value + "'");
        }
    } else if (k == "base") {
        sc.initial.base = parse_double(value, line);
    } else if (k == "amplitude") {
        sc.initial.amplitude = parse_double(value, line);
    } else if (k == "center") {
        sc.initial.center = parse_double(value, line);
    } else if (k == "width") {
        sc.initial.width = parse_double(value, line);
    } else if (k == "height") {
        sc.initial.height = parse_double(value, line);
    } else if (k == "seed") {
        sc.initial.seed = static_cast<std::uint64_t>(parse_double(value, line));
    } else if (k == "degree") {
        sc.initial.degree = static_cast<int>(parse_double(value, line));
    } else if (k == "target_a0") {
        sc.initial.target_a0 = parse_double(value, line);
    } else if (k == "eta") {
        sc.initial.eta = parse_double(value, line);
    } else if (k == "mollify_eps") {
        sc.initial.mollify_eps = parse_double(value, line);
    } else if (k == "window_eps") {
        sc.initial.window_eps = parse_double(value, line);
    } else if (k == "checks") {
        sc.checks = split_list(value);
        for (const auto& name : sc.checks) {
            const auto& known = known_checks();
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                fail(line, "unknown check '" + name + "'");
            }
        }
    } else if (k == "fatal_min_max") {
        sc.fatal_min_max = parse_bool(value, line);
    } else if (k == "out") {
        sc.out_prefix = trim(value);
    } else if (k.rfind("sweep_", 0) == 0) {
        const std::string axis = k.substr(6);
        if (!kSweepKeys.count(axis)) fail(line, "unknown sweep axis '" + axis + "'");
        SweepSpec sweep{axis, {}};
        for (const auto& item : split_list(value)) sweep.values.push_back(parse_double(item, line));
        if (sweep.values.empty()) fail(line, "sweep list for '" + axis + "' is empty");
        sc.sweeps.push_back(std::move(sweep));
    } else {
        fail(line, "unknown key '" + key + "'");
    }
}

void validate_scenario(const Scenario& sc) {
    try {
        (void)sc.to_run_config();
    } catch (const parameter_error& e) {
        throw config_error("scenario [" + sc.name + "]: " + e.what());
    }
}

} // namespace

std::vector<Scenario> parse_config(const std::string& text) {
    std::vector<Scenario> scenarios;
    std::set<std::string> names;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    Scenario* current = nullptr;

    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find_first_of("#;");
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header");
            const std::string name = trim(s.substr(1, s.size() - 2));
            if (name.empty()) fail(line, "empty scenario name");
            if (!names.insert(name).second) fail(line, "duplicate scenario name '" + name + "'");
            scenarios.emplace_back();
            scenarios.back().name = name;
            current = &scenarios.back();
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value', got '" + s + "'");
        if (!current) fail(line, "key outside of a [scenario] section");
        apply_key(*current, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line);
    }

    for (const auto& sc : scenarios) validate_scenario(sc);
    return scenarios;
}

std::vector<Scenario> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace nlt
