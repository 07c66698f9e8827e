#include "erep/endurance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace erep {

double endurance_gain(double avg_power_w, double hover_power_w) {
    if (!(avg_power_w > 0))
        throw domain_error("endurance_gain: average power must be positive");
    return 100.0 * (hover_power_w / avg_power_w - 1.0);
}

LinkCheck verify_link_budget(const RelayPlan& plan, const Scenario& scenario,
                             double sample_step_m) {
    if (!(sample_step_m > 0))
        throw invalid_input_error("verify_link_budget: sample_step must be positive");
    if (plan.links.size() != scenario.faps.size())
        throw invalid_input_error("verify_link_budget: plan carries a link per FAP");
    LinkCheck check;
    check.min_snr_margin_db = std::numeric_limits<double>::infinity();

    auto probe = [&](const Point2& p) {
        const Point3 at{p.x, p.y, plan.altitude_m};
        for (std::size_t i = 0; i < scenario.faps.size(); ++i) {
            const auto& fp = scenario.faps[i].position;
            const double d = std::sqrt((at.x - fp.x) * (at.x - fp.x) +
                                       (at.y - fp.y) * (at.y - fp.y) +
                                       (at.z - fp.z) * (at.z - fp.z));
            const double snr = snr_db(plan.tx_power_dbm, scenario.radio.frequency_hz,
                                      std::max(d, 1e-9), scenario.radio.noise_dbm);
            const double margin = snr - plan.links[i].min_snr_db;
            if (margin < check.min_snr_margin_db) {
                check.min_snr_margin_db = margin;
                check.worst_point = at;
                check.worst_fap = static_cast<int>(i);
            }
        }
    };

    if (plan.cycle_length_m <= 0) {
        probe(plan.center);
        return check;
    }
    for (int s = 0; s < 6; ++s) {
        const Point2& a = plan.cycle[s];
        const Point2& b = plan.cycle[s + 1];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        const int steps = std::max(1, static_cast<int>(std::ceil(len / sample_step_m)));
        for (int k = 0; k <= steps; ++k) {
            const double t = static_cast<double>(k) / steps;
            probe({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return check;
}

EnduranceReport cycle_stats(const RelayPlan& plan, const PowerModel& model,
                            const Scenario& scenario,
                            double hover_seconds, double sample_step_m) {
    if (!(hover_seconds >= 0))
        throw invalid_input_error("cycle_stats: hover_seconds must be non-negative");
    EnduranceReport rep;
    rep.cycle_length_m = plan.cycle_length_m;
    rep.hover_power_w = hover_power(model);
    rep.hover_seconds_per_cycle = hover_seconds;

    if (plan.cycle_length_m <= 0) {
        // Degenerate cycle: the relay just hovers. Assigning the hover power
        // directly keeps the gain at exactly zero.
        rep.cycle_time_s = hover_seconds;
        rep.cycle_energy_j = hover_seconds * rep.hover_power_w;
        rep.avg_power_w = rep.hover_power_w;
        rep.gain_pct = 0.0;
    } else {
        const double cruise_time = plan.cycle_length_m / plan.cruise_speed_mps;
        const double cruise_power = propulsion_power(model, plan.cruise_speed_mps);
        rep.cycle_time_s = cruise_time + hover_seconds;
        rep.cycle_energy_j = cruise_time * cruise_power + hover_seconds * rep.hover_power_w;
        rep.avg_power_w = rep.cycle_energy_j / rep.cycle_time_s;
        rep.gain_pct = endurance_gain(rep.avg_power_w, rep.hover_power_w);
    }
    rep.min_snr_margin_db = verify_link_budget(plan, scenario, sample_step_m).min_snr_margin_db;
    return rep;
}

double grid_margin_db(const RelayPlan& plan, const Scenario& scenario, double resolution) {
    double r_min = std::numeric_limits<double>::infinity();
    for (const auto& link : plan.links)
        r_min = std::min(r_min, link.range_m);
    const double diag = std::sqrt(3.0) * resolution;
    return path_loss_db(scenario.radio.frequency_hz, r_min + diag) -
           path_loss_db(scenario.radio.frequency_hz, r_min);
}

} // namespace erep
