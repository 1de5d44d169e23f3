#include "nlt/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nlt/errors.hpp"

namespace nlt {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ensure_parent_dir(const std::string& path) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
}

} // namespace

std::string series_csv_text(const TimeSeries& series) {
    std::ostringstream out;
    const auto& names = DiagnosticsRecord::column_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out << ',';
        out << names[i];
    }
    out << '\n';
    for (const auto& rec : series.records) {
        const auto row = rec.to_row();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

void write_series_csv(const std::string& path, const TimeSeries& series) {
    ensure_parent_dir(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open '" + path + "' for writing");
    out << series_csv_text(series);
}

TimeSeries read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open series file '" + path + "'");
    TimeSeries ts;
    std::string line;
    if (!std::getline(in, line)) throw config_error("series file '" + path + "' is empty");

    std::ostringstream expected;
    const auto& names = DiagnosticsRecord::column_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) expected << ',';
        expected << names[i];
    }
    if (line != expected.str()) {
        throw config_error("series file '" + path + "' has an unexpected header");
    }

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        ts.records.push_back(DiagnosticsRecord::from_row(row));
    }
    return ts;
}

std::string format_verdict(const EstimateVerdict& v) {
    std::ostringstream out;
    out << v.name << " applicable=" << (v.applicable ? "yes" : "no") << " holds=";
    if (!v.applicable) {
        out << "not_asserted";
    } else {
        out << (v.holds ? "yes" : "no");
    }
    out << " worst_margin=" << format_double(v.worst_margin)
        << " tolerance=" << format_double(v.tolerance);
    if (!v.note.empty()) out << "  # " << v.note;
    return out.str();
}

void write_verdicts(const std::string& path, const std::vector<EstimateVerdict>& verdicts) {
    ensure_parent_dir(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open '" + path + "' for writing");
    for (const auto& v : verdicts) out << format_verdict(v) << '\n';
}

} // namespace nlt
