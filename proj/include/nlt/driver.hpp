#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nlt/scenario.hpp"

namespace nlt {

struct ExecOptions {
    bool check_only = false;                // re-evaluate verdicts on existing CSVs
    std::optional<std::uint64_t> seed;      // overrides the scenario seed
    std::optional<std::string> out_prefix;  // overrides the scenario output prefix
};

/// Exit codes: 0 all applicable checks hold, 1 some applicable check failed,
/// 2 usage/config/I-O error (raised as config_error by lower layers),
/// 3 numerical blow-up detected.
enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_blow_up = 3 };

/// Run every scenario (expanding sweeps), write <prefix>_series.csv and
/// <prefix>_verdicts.txt per variant, stream a summary, and return the exit
/// code.
int execute(const std::vector<Scenario>& scenarios, const ExecOptions& options,
            std::ostream& summary);

} // namespace nlt
