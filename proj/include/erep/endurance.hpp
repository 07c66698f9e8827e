#pragma once

#include "erep/planner.hpp"
#include "erep/power_model.hpp"
#include "erep/scenario.hpp"

namespace erep {

struct EnduranceReport {
    double cycle_length_m = 0;
    double cycle_time_s = 0;
    double cycle_energy_j = 0;
    double avg_power_w = 0;
    double hover_power_w = 0;
    double gain_pct = 0;        // endurance gain over hovering at the anchor
    double min_snr_margin_db = 0;
    double hover_seconds_per_cycle = 0;
};

struct LinkCheck {
    double min_snr_margin_db = 0;
    Point3 worst_point;
    int worst_fap = -1; // scenario index of the FAP with the worst margin
};

// Endurance gain of flying at avg_power instead of hovering, as a percent.
// Capacity-free: the ratio of powers is the inverse ratio of endurances for
// any battery. Throws domain_error for non-positive average power.
double endurance_gain(double avg_power_w, double hover_power_w);

// Samples every cycle segment at most sample_step apart (endpoints
// included) and reports the worst SNR margin over samples and FAPs, where
// each FAP's margin is measured against its own MCS threshold. A
// zero-length cycle is checked at the anchor alone.
// Throws invalid_input_error for sample_step <= 0.
LinkCheck verify_link_budget(const RelayPlan& plan, const Scenario& scenario,
                             double sample_step_m = 0.1);

// Per-cycle time/energy accounting: the cycle is flown at cruise speed with
// one 1 s hover at each vertex after the start (six per cycle). A
// zero-length cycle hovers throughout, so its average power is exactly the
// hover power and the gain is exactly zero.
EnduranceReport cycle_stats(const RelayPlan& plan, const PowerModel& model,
                            const Scenario& scenario,
                            double hover_seconds = 6.0,
                            double sample_step_m = 0.1);

// Worst-case path-loss growth across one voxel diagonal at the tightest
// range sphere: the tolerance a voxel-certified margin can legitimately
// miss by.
double grid_margin_db(const RelayPlan& plan, const Scenario& scenario, double resolution);

} // namespace erep
