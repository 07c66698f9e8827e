#include "erep/json_io.hpp"

#include "erep/reporting.hpp"

#include <json.hpp>

#include <cmath>
#include <initializer_list>
#include <string>

namespace erep {
namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input_error(std::string(what) + ": " + e.what());
    }
}

void reject_unknown(const json& obj, const char* what,
                    std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known)
            throw invalid_input_error(std::string(what) + ": unknown key \"" + it.key() + "\"");
    }
}

double num(const json& obj, const char* key, const char* what) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw invalid_input_error(std::string(what) + ": missing or non-numeric \"" + key + "\"");
    return obj[key].get<double>();
}

double num_or(const json& obj, const char* key, double fallback, const char* what) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number())
        throw invalid_input_error(std::string(what) + ": non-numeric \"" + key + "\"");
    return obj[key].get<double>();
}

RadioConfig radio_from(const json& obj) {
    RadioConfig radio = default_radio_config();
    reject_unknown(obj, "radio",
                   {"freq_mhz", "n0_dbm", "pt0_dbm", "pt_step_db", "pt_max_dbm", "mcs_table"});
    radio.frequency_hz = num_or(obj, "freq_mhz", radio.frequency_hz / 1e6, "radio") * 1e6;
    radio.noise_dbm = num_or(obj, "n0_dbm", radio.noise_dbm, "radio");
    radio.tx_power_initial_dbm = num_or(obj, "pt0_dbm", radio.tx_power_initial_dbm, "radio");
    radio.tx_power_step_db = num_or(obj, "pt_step_db", radio.tx_power_step_db, "radio");
    radio.tx_power_max_dbm = num_or(obj, "pt_max_dbm", radio.tx_power_max_dbm, "radio");
    if (obj.contains("mcs_table")) {
        if (!obj["mcs_table"].is_array())
            throw invalid_input_error("radio: \"mcs_table\" must be an array");
        radio.mcs.rows.clear();
        for (const auto& row : obj["mcs_table"]) {
            reject_unknown(row, "mcs_table row", {"index", "min_snr_db", "rate_mbps"});
            McsRow r;
            r.index = static_cast<int>(num(row, "index", "mcs_table row"));
            r.min_snr_db = num(row, "min_snr_db", "mcs_table row");
            r.data_rate_bps = num(row, "rate_mbps", "mcs_table row") * 1e6;
            radio.mcs.rows.push_back(r);
        }
    }
    validate(radio);
    return radio;
}

UavPhysicalParams uav_from(const json& obj) {
    UavPhysicalParams uav;
    reject_unknown(obj, "uav",
                   {"weight_n", "rotor_radius_m", "blade_angular_velocity_rad_per_s",
                    "induced_power_correction", "profile_drag_coefficient",
                    "fuselage_drag_ratio", "rotor_solidity", "air_density_kg_per_m3",
                    "max_speed_mps", "max_power_w"});
    uav.weight = num_or(obj, "weight_n", uav.weight, "uav");
    uav.rotor_radius = num_or(obj, "rotor_radius_m", uav.rotor_radius, "uav");
    uav.blade_angular_velocity =
        num_or(obj, "blade_angular_velocity_rad_per_s", uav.blade_angular_velocity, "uav");
    uav.induced_power_correction =
        num_or(obj, "induced_power_correction", uav.induced_power_correction, "uav");
    uav.profile_drag_coefficient =
        num_or(obj, "profile_drag_coefficient", uav.profile_drag_coefficient, "uav");
    uav.fuselage_drag_ratio = num_or(obj, "fuselage_drag_ratio", uav.fuselage_drag_ratio, "uav");
    uav.rotor_solidity = num_or(obj, "rotor_solidity", uav.rotor_solidity, "uav");
    uav.air_density = num_or(obj, "air_density_kg_per_m3", uav.air_density, "uav");
    uav.max_speed = num_or(obj, "max_speed_mps", uav.max_speed, "uav");
    uav.max_power = num_or(obj, "max_power_w", uav.max_power, "uav");
    return uav;
}

json point2_json(const Point2& p) {
    return json::array({p.x, p.y});
}

Point2 point2_from(const json& arr, const char* what) {
    if (!arr.is_array() || arr.size() != 2 || !arr[0].is_number() || !arr[1].is_number())
        throw invalid_input_error(std::string(what) + ": expected [x, y]");
    return {arr[0].get<double>(), arr[1].get<double>()};
}

} // namespace

Scenario scenario_from_json(const std::string& text) {
    const json doc = parse(text, "scenario");
    if (!doc.is_object())
        throw invalid_input_error("scenario: top level must be an object");
    reject_unknown(doc, "scenario", {"faps", "radio", "uav"});
    if (!doc.contains("faps") || !doc["faps"].is_array())
        throw invalid_input_error("scenario: missing \"faps\" array");

    Scenario sc;
    if (doc.contains("radio"))
        sc.radio = radio_from(doc["radio"]);
    else
        sc.radio = default_radio_config();
    if (doc.contains("uav"))
        sc.uav = uav_from(doc["uav"]);

    for (const auto& f : doc["faps"]) {
        reject_unknown(f, "fap", {"x", "y", "z", "demand_mbps"});
        const double demand_mbps = num(f, "demand_mbps", "fap");
        if (demand_mbps < 0)
            throw invalid_input_error("fap: negative demand");
        if (demand_mbps == 0)
            continue; // a silent FAP places no constraint on the relay
        Fap fap;
        fap.position = {num(f, "x", "fap"), num(f, "y", "fap"), num(f, "z", "fap")};
        fap.demand_bps = demand_mbps * 1e6;
        sc.faps.push_back(fap);
    }
    validate(sc);
    return sc;
}

Scenario load_scenario(const std::string& path) {
    return scenario_from_json(read_file(path));
}

std::string scenario_to_json(const Scenario& scenario) {
    json faps = json::array();
    for (const auto& f : scenario.faps)
        faps.push_back({{"x", f.position.x},
                        {"y", f.position.y},
                        {"z", f.position.z},
                        {"demand_mbps", f.demand_bps / 1e6}});
    json mcs = json::array();
    for (const auto& r : scenario.radio.mcs.rows)
        mcs.push_back({{"index", r.index},
                       {"min_snr_db", r.min_snr_db},
                       {"rate_mbps", r.data_rate_bps / 1e6}});
    json doc = {
        {"faps", faps},
        {"radio",
         {{"freq_mhz", scenario.radio.frequency_hz / 1e6},
          {"n0_dbm", scenario.radio.noise_dbm},
          {"pt0_dbm", scenario.radio.tx_power_initial_dbm},
          {"pt_step_db", scenario.radio.tx_power_step_db},
          {"pt_max_dbm", scenario.radio.tx_power_max_dbm},
          {"mcs_table", mcs}}},
        {"uav",
         {{"weight_n", scenario.uav.weight},
          {"rotor_radius_m", scenario.uav.rotor_radius},
          {"blade_angular_velocity_rad_per_s", scenario.uav.blade_angular_velocity},
          {"induced_power_correction", scenario.uav.induced_power_correction},
          {"profile_drag_coefficient", scenario.uav.profile_drag_coefficient},
          {"fuselage_drag_ratio", scenario.uav.fuselage_drag_ratio},
          {"rotor_solidity", scenario.uav.rotor_solidity},
          {"air_density_kg_per_m3", scenario.uav.air_density},
          {"max_speed_mps", scenario.uav.max_speed},
          {"max_power_w", scenario.uav.max_power}}},
    };
    return doc.dump(2) + "\n";
}

UavPhysicalParams uav_params_from_json(const std::string& text) {
    const json doc = parse(text, "params");
    if (!doc.is_object())
        throw invalid_input_error("params: top level must be an object");
    if (doc.contains("uav"))
        return uav_from(doc["uav"]);
    return uav_from(doc);
}

std::string plan_to_json(const RelayPlan& plan) {
    json waypoints = json::array();
    for (const auto& w : plan.waypoints)
        waypoints.push_back(point2_json(w));
    json cycle = json::array();
    for (const auto& c : plan.cycle)
        cycle.push_back(point2_json(c));
    json per_fap = json::array();
    for (const auto& link : plan.links)
        per_fap.push_back({{"mcs", link.mcs_index},
                           {"snr_db", link.min_snr_db},
                           {"range_m", link.range_m}});
    json doc = {
        {"tx_power_dbm", plan.tx_power_dbm},
        {"altitude_m", plan.altitude_m},
        {"pc", point2_json(plan.center)},
        {"waypoints", waypoints},
        {"cycle", cycle},
        {"cruise_speed_mps", plan.cruise_speed_mps},
        {"variant", plan.variant},
        {"per_fap", per_fap},
    };
    return doc.dump(2) + "\n";
}

RelayPlan plan_from_json(const std::string& text) {
    const json doc = parse(text, "plan");
    if (!doc.is_object())
        throw invalid_input_error("plan: top level must be an object");
    reject_unknown(doc, "plan",
                   {"tx_power_dbm", "altitude_m", "pc", "waypoints", "cycle",
                    "cruise_speed_mps", "variant", "per_fap"});
    RelayPlan plan;
    plan.tx_power_dbm = num(doc, "tx_power_dbm", "plan");
    plan.altitude_m = num(doc, "altitude_m", "plan");
    if (!doc.contains("pc"))
        throw invalid_input_error("plan: missing \"pc\"");
    plan.center = point2_from(doc["pc"], "plan pc");
    if (!doc.contains("waypoints") || !doc["waypoints"].is_array() || doc["waypoints"].size() != 4)
        throw invalid_input_error("plan: \"waypoints\" must hold 4 points");
    for (std::size_t i = 0; i < 4; ++i)
        plan.waypoints[i] = point2_from(doc["waypoints"][i], "plan waypoint");
    if (!doc.contains("cycle") || !doc["cycle"].is_array() || doc["cycle"].size() != 7)
        throw invalid_input_error("plan: \"cycle\" must hold 7 points");
    for (std::size_t i = 0; i < 7; ++i)
        plan.cycle[i] = point2_from(doc["cycle"][i], "plan cycle point");
    plan.cruise_speed_mps = num(doc, "cruise_speed_mps", "plan");
    plan.variant = static_cast<int>(num(doc, "variant", "plan"));
    if (!doc.contains("per_fap") || !doc["per_fap"].is_array())
        throw invalid_input_error("plan: missing \"per_fap\" array");
    for (const auto& link : doc["per_fap"]) {
        reject_unknown(link, "per_fap entry", {"mcs", "snr_db", "range_m"});
        FapLink l;
        l.mcs_index = static_cast<int>(num(link, "mcs", "per_fap entry"));
        l.min_snr_db = num(link, "snr_db", "per_fap entry");
        l.range_m = num(link, "range_m", "per_fap entry");
        plan.links.push_back(l);
    }
    double len = 0;
    for (int i = 0; i < 6; ++i)
        len += std::hypot(plan.cycle[i + 1].x - plan.cycle[i].x,
                          plan.cycle[i + 1].y - plan.cycle[i].y);
    plan.cycle_length_m = len;
    return plan;
}

std::string endurance_to_json(const EnduranceReport& report) {
    json doc = {
        {"cycle_length_m", report.cycle_length_m},
        {"cycle_time_s", report.cycle_time_s},
        {"cycle_energy_j", report.cycle_energy_j},
        {"avg_power_w", report.avg_power_w},
        {"hover_power_w", report.hover_power_w},
        {"gain_pct", report.gain_pct},
        {"min_snr_margin_db", report.min_snr_margin_db},
        {"hover_seconds_per_cycle", report.hover_seconds_per_cycle},
    };
    return doc.dump(2) + "\n";
}

std::string link_check_to_json(const LinkCheck& check) {
    json doc = {
        {"min_snr_margin_db", check.min_snr_margin_db},
        {"worst_point", json::array({check.worst_point.x, check.worst_point.y, check.worst_point.z})},
        {"worst_fap", check.worst_fap},
    };
    return doc.dump(2) + "\n";
}

} // namespace erep
