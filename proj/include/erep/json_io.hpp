#pragma once

#include "erep/endurance.hpp"
#include "erep/planner.hpp"
#include "erep/scenario.hpp"

#include <string>

namespace erep {

// Scenario JSON:
//   {"faps": [{"x","y","z","demand_mbps"}, ...],
//    "radio": {"freq_mhz","n0_dbm","pt0_dbm","pt_max_dbm",
//              "pt_step_db"?, "mcs_table"?: [{"index","min_snr_db","rate_mbps"}]},
//    "uav": {"weight_n","rotor_radius_m", ...}}
// radio and uav are optional and default; unknown keys are rejected.
// FAPs with zero demand are dropped; negative demand is an error.
// Throws invalid_input_error on malformed content.
Scenario scenario_from_json(const std::string& text);
Scenario load_scenario(const std::string& path); // io_error on file problems
std::string scenario_to_json(const Scenario& scenario);

// Airframe constants from either a bare params object or a document with a
// "uav" member (a full scenario file works).
UavPhysicalParams uav_params_from_json(const std::string& text);

std::string plan_to_json(const RelayPlan& plan);
RelayPlan plan_from_json(const std::string& text);

std::string endurance_to_json(const EnduranceReport& report);
std::string link_check_to_json(const LinkCheck& check);

} // namespace erep
