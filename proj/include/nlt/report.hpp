#pragma once

#include <string>
#include <vector>

#include "nlt/timestepper.hpp"
#include "nlt/verification.hpp"

namespace nlt {

/// CSV with one header row (the DiagnosticsRecord columns) and one row per
/// record, comma separator, '.' decimal point, %.17g formatting so that
/// identical runs produce byte-identical files.
void write_series_csv(const std::string& path, const TimeSeries& series);
std::string series_csv_text(const TimeSeries& series);

/// Rebuild the record list from a CSV written by write_series_csv. Snapshots
/// and terminal status are not stored in the file; the result carries the
/// records only.
TimeSeries read_series_csv(const std::string& path);

/// One line per verdict: name, applicable, holds (or not_asserted),
/// worst_margin, tolerance.
void write_verdicts(const std::string& path, const std::vector<EstimateVerdict>& verdicts);
std::string format_verdict(const EstimateVerdict& v);

} // namespace nlt
