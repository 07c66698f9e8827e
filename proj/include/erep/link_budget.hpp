#pragma once

#include "erep/errors.hpp"

#include <cstddef>
#include <vector>

namespace erep {

struct McsRow {
    int index;
    double min_snr_db;
    double data_rate_bps;
};

struct McsTable {
    std::vector<McsRow> rows; // strictly increasing in min_snr and data rate
};

struct RadioConfig {
    double frequency_hz = 5180e6;
    double noise_dbm = -85.0;
    double tx_power_initial_dbm = 0.0;
    double tx_power_step_db = 1.0;
    double tx_power_max_dbm = 30.0;
    McsTable mcs;
};

// 802.11ac-style ladder; the endpoint thresholds (11 dB at 58.5 Mbit/s,
// 38 dB at 780 Mbit/s) are fixed, the intermediate thresholds are defaults
// that configs may override.
McsTable default_mcs_table();

RadioConfig default_radio_config();

// Throws invalid_input_error if rows are empty or not strictly increasing
// in both threshold and rate.
void validate(const McsTable& table);
void validate(const RadioConfig& radio);

// Free-space loss 20*log10(4*pi*d*f/c) with c = 3e8 m/s exactly.
// Throws domain_error for d <= 0 or f <= 0.
double path_loss_db(double frequency_hz, double distance_m);

double snr_db(double tx_power_dbm, double frequency_hz, double distance_m, double noise_dbm);

// Lowest row whose per-FAP fair share (rate / n_faps) covers the demand.
// Throws infeasible_demand_error when even the top row falls short.
McsRow target_mcs(double demand_bps, std::size_t n_faps, const McsTable& table);

// Distance at which the SNR equals target_snr_db; closed-form inverse of
// the path-loss model, all arithmetic in the log domain.
double max_range(double tx_power_dbm, double frequency_hz, double noise_dbm,
                 double target_snr_db);

} // namespace erep
