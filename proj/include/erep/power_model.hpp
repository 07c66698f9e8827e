#pragma once

#include "erep/errors.hpp"

namespace erep {

// Raw rotor/airframe constants. Units in field names where not obvious:
// weight in newtons, angular velocity in rad/s, density in kg/m^3.
struct UavPhysicalParams {
    double weight = 20.0;
    double rotor_radius = 0.4;
    double blade_angular_velocity = 300.0;
    double induced_power_correction = 0.1;
    double profile_drag_coefficient = 0.012;
    double fuselage_drag_ratio = 0.6;
    double rotor_solidity = 0.05;
    double air_density = 1.225;
    double max_speed = 30.0;   // m/s
    double max_power = 500.0;  // W, cap checked at plan time
};

// Coefficients of the rotary-wing power curve, derived once from the raw
// constants and then treated as immutable.
struct PowerModel {
    double blade_profile_hover;    // W
    double induced_hover;          // W
    double tip_speed;              // m/s
    double induced_velocity_hover; // m/s
    double rotor_disc_area;        // m^2
    double parasite_coefficient;   // W s^3/m^3
    double max_speed;              // m/s
    double max_power;              // W
};

struct OptimalSpeed {
    double speed; // m/s
    double power; // W
};

// Throws invalid_input_error when a constant is non-positive where it must
// be positive (or negative where it must be non-negative).
PowerModel derive_power_model(const UavPhysicalParams& params);

// Propulsion power at forward speed v: blade-profile + induced + parasite
// terms. Throws domain_error outside [0, max_speed].
double propulsion_power(const PowerModel& model, double speed_mps);

// Power at v = 0; identical to propulsion_power(model, 0).
double hover_power(const PowerModel& model);

// Minimizer of the power curve over [0, max_speed], resolved to better than
// 0.01 m/s. A coarse scan brackets the minimum first so a cap-bound
// monotone curve returns the endpoint exactly.
OptimalSpeed optimal_speed(const PowerModel& model);

} // namespace erep
