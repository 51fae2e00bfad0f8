#pragma once

#include <iosfwd>
#include <string>

#include "faceq/metrics.hpp"
#include "faceq/segmentation.hpp"
#include "faceq/sweep.hpp"

namespace faceq {

// Provenance block written as '#' comments at the top of plot data files.
struct ReportHeader {
    std::string tool_version;
    std::string image_path;
    std::string codec;
    std::string thresholds; // preset name or explicit ranges, free text
    SsimParams params;
};

struct ReportRecord {
    ReportHeader header;
    SweepTable table;
};

// A score rendered with exactly nine digits after the decimal point,
// C locale, no exponent. Round-trips byte-exactly through read_csv.
std::string format_score(double v);

// CSV with the fixed header "quality,region,metric,value" and one row per
// sweep entry, values formatted by format_score. No metadata lines; those
// belong to the plot data writer and the CLI.
void write_csv(const SweepTable& t, std::ostream& os);
std::string csv_string(const SweepTable& t);

// Strict parser for the exact layout write_csv produces. Throws Error on any
// deviation (wrong header, wrong field count, malformed numbers).
SweepTable read_csv(std::istream& is);

// Gnuplot-friendly rendering: '#' metadata header, then one block per
// metric ("index" convention, blocks separated by blank lines) whose rows
// are "<quality> <value per region>". Requires a rectangular table: every
// (quality, region) pair present for each metric. Throws Error otherwise.
void write_plot_data(const ReportRecord& r, std::ostream& os);

// 1-bit PNG, set pixels white. Throws IoError when the file cannot be written.
void write_mask_png(const RegionMask& m, const std::string& path);

} // namespace faceq
