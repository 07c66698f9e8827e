#include "erep/power_model.hpp"

#include <algorithm>
#include <cmath>

namespace erep {

PowerModel derive_power_model(const UavPhysicalParams& p) {
    if (p.weight <= 0 || p.rotor_radius <= 0 || p.blade_angular_velocity <= 0 ||
        p.air_density <= 0 || p.max_speed <= 0 || p.max_power <= 0) {
        throw invalid_input_error("power model constants must be positive");
    }
    if (p.induced_power_correction < 0 || p.profile_drag_coefficient < 0 ||
        p.fuselage_drag_ratio < 0 || p.rotor_solidity < 0) {
        throw invalid_input_error("power model coefficients must be non-negative");
    }

    const double pi = 3.14159265358979323846;
    PowerModel m{};
    m.rotor_disc_area = pi * p.rotor_radius * p.rotor_radius;
    m.tip_speed = p.blade_angular_velocity * p.rotor_radius;
    m.induced_velocity_hover = std::sqrt(p.weight / (2.0 * p.air_density * m.rotor_disc_area));
    m.blade_profile_hover = (p.profile_drag_coefficient / 8.0) * p.air_density *
                            p.rotor_solidity * m.rotor_disc_area *
                            std::pow(p.blade_angular_velocity, 3) *
                            std::pow(p.rotor_radius, 3);
    m.induced_hover = (1.0 + p.induced_power_correction) * std::pow(p.weight, 1.5) /
                      std::sqrt(2.0 * p.air_density * m.rotor_disc_area);
    m.parasite_coefficient = 0.5 * p.fuselage_drag_ratio * p.air_density *
                             p.rotor_solidity * m.rotor_disc_area;
    m.max_speed = p.max_speed;
    m.max_power = p.max_power;
    return m;
}

double propulsion_power(const PowerModel& m, double v) {
    if (v < 0.0 || v > m.max_speed) {
        throw domain_error("speed outside [0, max_speed]");
    }
    const double v0 = m.induced_velocity_hover;
    const double blade = m.blade_profile_hover * (1.0 + 3.0 * v * v / (m.tip_speed * m.tip_speed));
    // Induced-velocity ratio from momentum theory; the bracket is (vi/v0)^2,
    // so the induced power scales with its square root.
    const double bracket = std::sqrt(1.0 + std::pow(v, 4) / (4.0 * std::pow(v0, 4))) -
                           v * v / (2.0 * v0 * v0);
    const double induced = m.induced_hover * std::sqrt(bracket);
    const double parasite = m.parasite_coefficient * v * v * v;
    return blade + induced + parasite;
}

double hover_power(const PowerModel& m) {
    return m.blade_profile_hover + m.induced_hover;
}

OptimalSpeed optimal_speed(const PowerModel& m) {
    // Coarse scan every 0.5 m/s (endpoints included) to bracket the minimum.
    double best_v = 0.0;
    double best_p = propulsion_power(m, 0.0);
    for (double v = 0.5; v < m.max_speed + 0.25; v += 0.5) {
        const double vv = std::min(v, m.max_speed);
        const double p = propulsion_power(m, vv);
        if (p < best_p) {
            best_p = p;
            best_v = vv;
        }
    }

    // Golden-section refinement inside the bracket.
    double a = std::max(0.0, best_v - 0.5);
    double b = std::min(m.max_speed, best_v + 0.5);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    while (b - a > 1e-4) {
        if (propulsion_power(m, c) < propulsion_power(m, d)) {
            b = d;
            d = c;
            c = b - invphi * (b - a);
        } else {
            a = c;
            c = d;
            d = a + invphi * (b - a);
        }
    }
    double v = 0.5 * (a + b);
    double p = propulsion_power(m, v);

    // Prefer an exact endpoint when it is at least as good; a cap-bound
    // monotone curve then reports the cap itself rather than cap - epsilon.
    for (double edge : {0.0, m.max_speed}) {
        const double pe = propulsion_power(m, edge);
        if (pe <= p) {
            v = edge;
            p = pe;
        }
    }
    return {v, p};
}

} // namespace erep
