#include "erep/reporting.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace erep {
namespace {

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

double percentile(const std::vector<double>& values, double q) {
    if (values.empty())
        throw invalid_input_error("percentile: empty input");
    if (!(q >= 0) || !(q <= 100))
        throw invalid_input_error("percentile: q outside [0, 100]");
    std::vector<double> v(values);
    std::sort(v.begin(), v.end());
    if (v.size() == 1)
        return v[0];
    const double rank = q / 100.0 * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(rank));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (rank - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records) {
    std::vector<int> order;
    for (const auto& r : records)
        if (std::find(order.begin(), order.end(), r.fap_count) == order.end())
            order.push_back(r.fap_count);

    std::vector<SummaryRow> out;
    out.reserve(order.size());
    for (int count : order) {
        SummaryRow row;
        row.fap_count = count;
        std::vector<double> gains;
        for (const auto& r : records) {
            if (r.fap_count != count)
                continue;
            if (r.status == "ok")
                gains.push_back(r.gain_pct);
            else
                ++row.failures;
        }
        if (gains.empty()) {
            row.p25 = row.p50 = row.p75 = row.p95 = row.mean =
                std::numeric_limits<double>::quiet_NaN();
        } else {
            row.p25 = percentile(gains, 25);
            row.p50 = percentile(gains, 50);
            row.p75 = percentile(gains, 75);
            row.p95 = percentile(gains, 95);
            double sum = 0;
            for (double g : gains)
                sum += g;
            row.mean = sum / static_cast<double>(gains.size());
        }
        out.push_back(row);
    }
    return out;
}

std::string records_csv(const std::vector<SweepRecord>& records) {
    std::string out = "fap_count,run,gain_pct,tx_power_dbm,cycle_length_m,status\n";
    for (const auto& r : records) {
        out += std::to_string(r.fap_count);
        out += ',';
        out += std::to_string(r.run);
        out += ',';
        out += fixed4(r.gain_pct);
        out += ',';
        out += fixed4(r.tx_power_dbm);
        out += ',';
        out += fixed4(r.cycle_length_m);
        out += ',';
        out += r.status;
        out += '\n';
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::string out = "fap_count,p25,p50,p75,p95,mean,failures\n";
    for (const auto& r : rows) {
        out += std::to_string(r.fap_count);
        out += ',';
        out += fixed4(r.p25);
        out += ',';
        out += fixed4(r.p50);
        out += ',';
        out += fixed4(r.p75);
        out += ',';
        out += fixed4(r.p95);
        out += ',';
        out += fixed4(r.mean);
        out += ',';
        out += std::to_string(r.failures);
        out += '\n';
    }
    return out;
}

std::string records_json(const std::vector<SweepRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"fap_count", r.fap_count},
                       {"run", r.run},
                       {"gain_pct", r.gain_pct},
                       {"tx_power_dbm", r.tx_power_dbm},
                       {"cycle_length_m", r.cycle_length_m},
                       {"status", r.status}});
    return arr.dump(2) + "\n";
}

std::string summary_json(const std::vector<SummaryRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"fap_count", r.fap_count},
                       {"p25", r.p25},
                       {"p50", r.p50},
                       {"p75", r.p75},
                       {"p95", r.p95},
                       {"mean", r.mean},
                       {"failures", r.failures}});
    return arr.dump(2) + "\n";
}

std::vector<SweepRecord> parse_records_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "fap_count,run,gain_pct,tx_power_dbm,cycle_length_m,status")
        throw invalid_input_error("records CSV: bad or missing header");
    std::vector<SweepRecord> out;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string field[6];
        for (int i = 0; i < 6; ++i)
            if (!std::getline(row, field[i], ','))
                throw invalid_input_error("records CSV: short row: " + line);
        try {
            SweepRecord r;
            r.fap_count = std::stoi(field[0]);
            r.run = std::stoi(field[1]);
            r.gain_pct = std::stod(field[2]);
            r.tx_power_dbm = std::stod(field[3]);
            r.cycle_length_m = std::stod(field[4]);
            r.status = field[5];
            out.push_back(std::move(r));
        } catch (const std::exception&) {
            throw invalid_input_error("records CSV: bad row: " + line);
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open for writing: " + path);
    out << content;
    if (!out)
        throw io_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw io_error("read failed: " + path);
    return buf.str();
}

} // namespace erep
