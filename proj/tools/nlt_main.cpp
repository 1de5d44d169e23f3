// Batch front-end: run scenario files, emit per-run time series and verdicts.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

#include "nlt/driver.hpp"
#include "nlt/errors.hpp"
#include "nlt/verification.hpp"

int main(int argc, char** argv) {
    CLI::App app{"1D nonlocal transport laboratory"};

    std::string config_path;
    std::string scenario_name;
    std::string out_prefix;
    bool check_only = false;
    bool list_checks = false;
    std::uint64_t seed = 0;

    app.add_option("--config", config_path, "scenario config file");
    app.add_option("--scenario", scenario_name, "run only the named scenario");
    app.add_option("--out", out_prefix, "output prefix override");
    app.add_flag("--check-only", check_only, "re-evaluate verdicts on an existing series");
    auto* seed_opt = app.add_option("--seed", seed, "seed override for randomized initial data");
    app.add_flag("--list-checks", list_checks, "print the known check names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return nlt::exit_usage;
    }

    if (list_checks) {
        for (const auto& name : nlt::known_checks()) std::cout << name << '\n';
        return nlt::exit_ok;
    }

    if (config_path.empty()) {
        std::cerr << "error: --config is required (or use --list-checks)\n";
        return nlt::exit_usage;
    }

    try {
        auto scenarios = nlt::parse_config_file(config_path);
        if (!scenario_name.empty()) {
            auto it = std::find_if(scenarios.begin(), scenarios.end(),
                                   [&](const nlt::Scenario& s) { return s.name == scenario_name; });
            if (it == scenarios.end()) {
                std::cerr << "error: no scenario named '" << scenario_name << "'\n";
                return nlt::exit_usage;
            }
            scenarios = {*it};
        }

        nlt::ExecOptions options;
        options.check_only = check_only;
        if (seed_opt->count() > 0) options.seed = seed;
        if (!out_prefix.empty()) options.out_prefix = out_prefix;

        return nlt::execute(scenarios, options, std::cout);
    } catch (const nlt::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return nlt::exit_usage;
    } catch (const nlt::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return nlt::exit_usage;
    }
}
