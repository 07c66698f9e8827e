#pragma once

#include "erep/errors.hpp"

#include <string>
#include <vector>

namespace erep {

// One sweep cell. status is "ok" or the failure kind; failed cells keep
// their gain at zero and are excluded from statistics but counted.
struct SweepRecord {
    int fap_count = 0;
    int run = 0;
    double gain_pct = 0;
    double tx_power_dbm = 0;
    double cycle_length_m = 0;
    std::string status = "ok";
};

struct SummaryRow {
    int fap_count = 0;
    double p25 = 0, p50 = 0, p75 = 0, p95 = 0, mean = 0;
    int failures = 0;
};

// Inclusive linear interpolation between order statistics:
// rank = q/100 * (n-1). Throws invalid_input_error on empty input or q
// outside [0, 100].
double percentile(const std::vector<double>& values, double q);

// Groups records by fap_count in first-appearance order. Only "ok" records
// enter the statistics; a group with none yields NaN statistics.
std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records);

// CSV with fixed 4-decimal numbers, so equal inputs yield identical bytes.
std::string records_csv(const std::vector<SweepRecord>& records);
std::string summary_csv(const std::vector<SummaryRow>& rows);

// JSON forms of the same tables.
std::string records_json(const std::vector<SweepRecord>& records);
std::string summary_json(const std::vector<SummaryRow>& rows);

// Inverse of records_csv at 4-decimal precision.
std::vector<SweepRecord> parse_records_csv(const std::string& csv);

// Whole-file helpers; failures surface as io_error naming the path.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace erep
