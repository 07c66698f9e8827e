#include "erep/link_budget.hpp"

#include <cmath>

namespace erep {

namespace {
constexpr double kSpeedOfLight = 3e8; // m/s, by convention of the link model
constexpr double kPi = 3.14159265358979323846;
} // namespace

McsTable default_mcs_table() {
    McsTable t;
    const double rates_mbps[] = {58.5, 117.0, 175.5, 234.0, 351.0,
                                 468.0, 526.5, 585.0, 702.0, 780.0};
    const double snrs[] = {11.0, 14.0, 17.0, 20.0, 24.0, 27.0, 30.0, 32.0, 35.0, 38.0};
    for (int i = 0; i < 10; ++i) {
        t.rows.push_back({i, snrs[i], rates_mbps[i] * 1e6});
    }
    return t;
}

RadioConfig default_radio_config() {
    RadioConfig r;
    r.mcs = default_mcs_table();
    return r;
}

void validate(const McsTable& table) {
    if (table.rows.empty()) {
        throw invalid_input_error("MCS table is empty");
    }
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        if (table.rows[i].min_snr_db <= table.rows[i - 1].min_snr_db ||
            table.rows[i].data_rate_bps <= table.rows[i - 1].data_rate_bps) {
            throw invalid_input_error("MCS rows must increase strictly in SNR and rate");
        }
    }
}

void validate(const RadioConfig& radio) {
    if (radio.frequency_hz <= 0) {
        throw invalid_input_error("carrier frequency must be positive");
    }
    if (radio.tx_power_step_db <= 0) {
        throw invalid_input_error("tx power step must be positive");
    }
    if (radio.tx_power_initial_dbm > radio.tx_power_max_dbm) {
        throw invalid_input_error("initial tx power exceeds the cap");
    }
    validate(radio.mcs);
}

double path_loss_db(double frequency_hz, double distance_m) {
    if (distance_m <= 0.0 || frequency_hz <= 0.0) {
        throw domain_error("path loss needs positive distance and frequency");
    }
    return 20.0 * std::log10(4.0 * kPi * distance_m * frequency_hz / kSpeedOfLight);
}

double snr_db(double tx_power_dbm, double frequency_hz, double distance_m, double noise_dbm) {
    return tx_power_dbm - path_loss_db(frequency_hz, distance_m) - noise_dbm;
}

McsRow target_mcs(double demand_bps, std::size_t n_faps, const McsTable& table) {
    if (demand_bps <= 0 || n_faps < 1) {
        throw invalid_input_error("demand must be positive and FAP count >= 1");
    }
    for (const McsRow& row : table.rows) {
        if (row.data_rate_bps / static_cast<double>(n_faps) >= demand_bps) {
            return row;
        }
    }
    throw infeasible_demand_error("demand exceeds the top-rate fair share");
}

double max_range(double tx_power_dbm, double frequency_hz, double noise_dbm,
                 double target_snr_db) {
    // snr(d) = pt - pl(d) - n0 solved for d, with pl(d) split as
    // pl(1 m) + 20*log10(d).
    const double pl_1m = 20.0 * std::log10(4.0 * kPi * frequency_hz / kSpeedOfLight);
    return std::pow(10.0, (tx_power_dbm - noise_dbm - target_snr_db - pl_1m) / 20.0);
}

} // namespace erep
