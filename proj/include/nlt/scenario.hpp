#pragma once

#include <string>
#include <vector>

#include "nlt/timestepper.hpp"

namespace nlt {

/// One parameter axis to sweep; the scenario is executed once per value
/// (cartesian product if several axes are given).
struct SweepSpec {
    std::string key; // epsilon_visc | n_points | dt | delta | gamma | alpha
    std::vector<double> values;
};

/// A named batch entry from a config file.
struct Scenario {
    std::string name;
    std::size_t n_points = 1024;
    double domain_length = 0.0; // 0 = default 32*pi
    ModelParams params;
    InitialDataSpec initial;
    double t_final = 1.0;
    DtPolicy dt_policy = DtPolicy::fixed(1e-3);
    int record_every = 10;
    WeightParams weight{0.5};
    std::vector<std::string> checks; // empty = all known checks
    bool fatal_min_max = false;
    Scheme scheme = Scheme::if_rk2;
    RhsForm form = RhsForm::advective;
    bool store_fields = false;
    std::vector<SweepSpec> sweeps;
    std::string out_prefix;

    RunConfig to_run_config() const;
};

/// Parse the flat key-value format with one [section] per scenario.
/// Unknown keys and invariant violations raise config_error with the
/// offending key and line number.
std::vector<Scenario> parse_config(const std::string& text);
std::vector<Scenario> parse_config_file(const std::string& path);

} // namespace nlt
