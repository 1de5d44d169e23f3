#include "nlt/driver.hpp"

#include <ostream>

#include "nlt/errors.hpp"
#include "nlt/report.hpp"
#include "nlt/verification.hpp"

namespace nlt {

namespace {

struct Variant {
    std::string label;  // scenario name plus sweep suffix
    std::string prefix; // output prefix
    Scenario scenario;  // sweep values applied
};

void apply_axis(Scenario& sc, const std::string& key, double value) {
    if (key == "epsilon_visc") {
        sc.params.epsilon_visc = value;
    } else if (key == "n_points") {
        sc.n_points = static_cast<std::size_t>(value);
    } else if (key == "dt") {
        sc.dt_policy = DtPolicy::fixed(value);
    } else if (key == "delta") {
        sc.params.delta = value;
    } else if (key == "gamma") {
        sc.params.gamma = value;
    } else if (key == "alpha") {
        sc.params.velocity.alpha = value;
    } else {
        throw config_error("unknown sweep axis '" + key + "'");
    }
}

std::vector<Variant> expand(const Scenario& sc, const ExecOptions& options,
                            bool multiple_scenarios) {
    std::string base_prefix;
    if (options.out_prefix) {
        // keep per-scenario outputs distinct under a shared override
        base_prefix = multiple_scenarios ? *options.out_prefix + "_" + sc.name
                                         : *options.out_prefix;
    } else {
        base_prefix = sc.out_prefix.empty() ? sc.name : sc.out_prefix;
    }

    std::vector<Variant> variants{{sc.name, base_prefix, sc}};
    if (options.seed) variants.front().scenario.initial.seed = *options.seed;

    for (const auto& sweep : sc.sweeps) {
        std::vector<Variant> next;
        for (const auto& variant : variants) {
            for (std::size_t i = 0; i < sweep.values.size(); ++i) {
                Variant v = variant;
                apply_axis(v.scenario, sweep.key, sweep.values[i]);
                v.label += " " + sweep.key + "=" + std::to_string(sweep.values[i]);
                v.prefix += "_" + sweep.key + std::to_string(i);
                next.push_back(std::move(v));
            }
        }
        variants = std::move(next);
    }
    return variants;
}

} // namespace

int execute(const std::vector<Scenario>& scenarios, const ExecOptions& options,
            std::ostream& summary) {
    bool any_failed = false;
    bool any_blow_up = false;

    for (const auto& sc : scenarios) {
        for (const auto& variant : expand(sc, options, scenarios.size() > 1)) {
            const RunConfig cfg = variant.scenario.to_run_config();
            const std::string series_path = variant.prefix + "_series.csv";
            const std::string verdict_path = variant.prefix + "_verdicts.txt";

            TimeSeries series;
            if (options.check_only) {
                series = read_series_csv(series_path);
                summary << variant.label << ": re-checking " << series.records.size()
                        << " records from " << series_path << '\n';
            } else {
                series = run(cfg);
                write_series_csv(series_path, series);
            }

            if (series.status.kind == RunStatus::Kind::blow_up) {
                any_blow_up = true;
                summary << variant.label << ": BLOW-UP at t = " << series.status.t << " ("
                        << series.records.size() << " records written)\n";
                write_verdicts(verdict_path, {});
                continue;
            }
            if (series.status.kind == RunStatus::Kind::check_failed) {
                any_failed = true;
                summary << variant.label << ": in-run check '" << series.status.check_name
                        << "' failed at t = " << series.status.t
                        << " (margin " << series.status.margin << ")\n";
            }

            const auto verdicts = run_checks(series, cfg.params, *cfg.grid, cfg.checks);
            write_verdicts(verdict_path, verdicts);

            int held = 0, failed = 0, skipped = 0;
            for (const auto& v : verdicts) {
                if (!v.applicable) {
                    ++skipped;
                } else if (v.holds) {
                    ++held;
                } else {
                    ++failed;
                    any_failed = true;
                    summary << variant.label << ": check '" << v.name << "' FAILED (margin "
                            << v.worst_margin << ", tolerance " << v.tolerance << ")\n";
                }
            }
            summary << variant.label << ": " << (options.check_only ? "checked" : "completed")
                    << ", checks " << held << " held / " << failed << " failed / " << skipped
                    << " not asserted -> " << series_path << '\n';
        }
    }

    if (any_blow_up) return exit_blow_up;
    return any_failed ? exit_check_failed : exit_ok;
}

} // namespace nlt
