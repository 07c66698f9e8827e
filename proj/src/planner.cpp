#include "erep/planner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace erep {
namespace {

// Nominal operating transmit power of the modeled radio. Escalating beyond
// it is legal up to the cap, but unusual enough to flag.
constexpr double kOperatingTxPowerDbm = 20.0;

constexpr double kTau = 6.283185307179586476925286766559;

double dist2d(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// True when some pair of spheres cannot touch at all; the voxel scan would
// necessarily come back empty, so the caller may skip it.
bool provably_disjoint(const std::vector<Point3>& centers, const std::vector<double>& radii) {
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            const double dx = centers[i].x - centers[j].x;
            const double dy = centers[i].y - centers[j].y;
            const double dz = centers[i].z - centers[j].z;
            const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
            if (d > radii[i] + radii[j])
                return true;
        }
    return false;
}

std::array<Point2, 7> build_cycle(const Point2& anchor, const std::array<Point2, 4>& wp) {
    return {anchor, wp[0], wp[1], anchor, wp[2], wp[3], anchor};
}

double cycle_length(const std::array<Point2, 7>& cycle) {
    double len = 0;
    for (int i = 0; i < 6; ++i)
        len += dist2d(cycle[i], cycle[i + 1]);
    return len;
}

} // namespace

Point2 displace_waypoint(const Point2& wp, const Point2& anchor, double z, double resolution,
                         const std::vector<Point3>& centers, const std::vector<double>& radii) {
    auto clear = [&](const Point2& p) {
        for (std::size_t i = 0; i < centers.size(); ++i) {
            const double dx = p.x - centers[i].x;
            const double dy = p.y - centers[i].y;
            const double dz = z - centers[i].z;
            const double d2 = dx * dx + dy * dy + dz * dz;
            if (d2 > radii[i] * radii[i])
                return false; // left a range sphere
            if (d2 == 0)
                return false; // still on a FAP
        }
        return true;
    };
    const double dx = anchor.x - wp.x;
    const double dy = anchor.y - wp.y;
    Point2 step_x{wp.x + std::copysign(resolution, dx), wp.y};
    Point2 step_y{wp.x, wp.y + std::copysign(resolution, dy)};
    if (std::abs(dx) >= std::abs(dy)) {
        if (dx != 0 && clear(step_x)) return step_x;
        if (dy != 0 && clear(step_y)) return step_y;
    } else {
        if (dy != 0 && clear(step_y)) return step_y;
        if (dx != 0 && clear(step_x)) return step_x;
    }
    const double d = std::hypot(dx, dy);
    if (d > 0) {
        const double s = std::min(resolution, d / 2) / d;
        Point2 direct{wp.x + dx * s, wp.y + dy * s};
        if (clear(direct))
            return direct;
    }
    return wp;
}

std::array<Point2, 4> clockwise_waypoints(const std::array<Point2, 4>& corners) {
    // Start at the topmost corner, ties toward larger x.
    Point2 p1 = corners[0];
    for (const auto& p : corners)
        if (p.y > p1.y || (p.y == p1.y && p.x > p1.x))
            p1 = p;
    // Distinct remainder, padded back to three with copies of the start so
    // duplicate corners collapse the cycle instead of distorting it.
    std::vector<Point2> rest;
    for (const auto& p : corners)
        if (!(p.x == p1.x && p.y == p1.y))
            rest.push_back(p);
    while (rest.size() < 3)
        rest.push_back(p1);
    Point2 mean{0, 0};
    for (const auto& p : corners) {
        mean.x += p.x / 4;
        mean.y += p.y / 4;
    }
    const double a1 = std::atan2(p1.y - mean.y, p1.x - mean.x);
    auto turn = [&](const Point2& p) {
        const double a = std::atan2(p.y - mean.y, p.x - mean.x);
        double k = std::fmod(a1 - a, kTau); // clockwise angle from the start
        if (k < 0)
            k += kTau;
        return k;
    };
    std::stable_sort(rest.begin(), rest.end(),
                     [&](const Point2& a, const Point2& b) { return turn(a) < turn(b); });
    return {p1, rest[0], rest[1], rest[2]};
}

std::vector<TrajectoryCandidate> candidate_trajectories(const std::vector<Point2>& slice,
                                                        const Point2& centroid) {
    const ExtremeQuery queries[3] = {ExtremeQuery::x_at_y_extremes,
                                     ExtremeQuery::y_at_x_extremes,
                                     ExtremeQuery::axis_aligned};
    std::vector<TrajectoryCandidate> out;
    out.reserve(3);
    for (int v = 0; v < 3; ++v) {
        TrajectoryCandidate cand;
        cand.variant = v + 1;
        cand.waypoints = clockwise_waypoints(extreme_points(slice, queries[v], centroid));
        cand.cycle = build_cycle(centroid, cand.waypoints);
        cand.cycle_length_m = cycle_length(cand.cycle);
        out.push_back(cand);
    }
    return out;
}

const TrajectoryCandidate& select_trajectory(const std::vector<TrajectoryCandidate>& candidates) {
    if (candidates.empty())
        throw invalid_input_error("select_trajectory: no candidates");
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].cycle_length_m > candidates[best].cycle_length_m)
            best = i;
    return candidates[best];
}

RelayPlan plan_relay(const Scenario& scenario,
                     double resolution,
                     const std::function<void(const std::string&)>& warn,
                     VoxelRegion* region_out) {
    validate(scenario);
    if (!(resolution > 0))
        throw invalid_input_error("plan_relay: resolution must be positive");
    const auto& radio = scenario.radio;
    const std::size_t n = scenario.faps.size();

    // Fair-share link assignment is power-independent, so it is fixed first.
    std::vector<FapLink> links(n);
    std::vector<Point3> centers(n);
    for (std::size_t i = 0; i < n; ++i) {
        const McsRow row = target_mcs(scenario.faps[i].demand_bps, n, radio.mcs);
        links[i].mcs_index = row.index;
        links[i].min_snr_db = row.min_snr_db;
        centers[i] = scenario.faps[i].position;
    }

    // Escalate transmit power until the range spheres share lattice points.
    double pt = radio.tx_power_initial_dbm;
    std::vector<double> radii(n);
    VoxelRegion region;
    while (true) {
        for (std::size_t i = 0; i < n; ++i)
            radii[i] = max_range(pt, radio.frequency_hz, radio.noise_dbm, links[i].min_snr_db);
        if (!provably_disjoint(centers, radii)) {
            region = intersect_spheres(centers, radii, resolution);
            if (!region.points.empty())
                break;
        }
        const double next = pt + radio.tx_power_step_db;
        if (next > radio.tx_power_max_dbm + 1e-9) {
            std::ostringstream msg;
            msg << "no common coverage region up to " << radio.tx_power_max_dbm << " dBm";
            throw no_intersection_error(msg.str());
        }
        if (warn && pt <= kOperatingTxPowerDbm && next > kOperatingTxPowerDbm) {
            std::ostringstream msg;
            msg << "transmit power escalated past the " << kOperatingTxPowerDbm
                << " dBm operating point (cap " << radio.tx_power_max_dbm << " dBm)";
            warn(msg.str());
        }
        pt = next;
    }
    for (std::size_t i = 0; i < n; ++i)
        links[i].range_m = radii[i];

    AltitudeSlice slice = best_altitude_slice(region);
    const Point2 anchor = slice_centroid(slice.points);

    auto candidates = candidate_trajectories(slice.points, anchor);
    // Keep waypoints off the FAPs themselves; a displaced corner changes the
    // cycle, so lengths are rebuilt before selection.
    for (auto& cand : candidates) {
        bool moved = false;
        for (auto& wp : cand.waypoints)
            for (std::size_t i = 0; i < n; ++i)
                if (wp.x == centers[i].x && wp.y == centers[i].y && slice.z == centers[i].z) {
                    wp = displace_waypoint(wp, anchor, slice.z, resolution, centers, radii);
                    moved = true;
                }
        if (moved) {
            cand.cycle = build_cycle(anchor, cand.waypoints);
            cand.cycle_length_m = cycle_length(cand.cycle);
        }
    }
    const TrajectoryCandidate& chosen = select_trajectory(candidates);

    const PowerModel pm = derive_power_model(scenario.uav);
    const OptimalSpeed opt = optimal_speed(pm);
    const double cruise = std::min(opt.speed, pm.max_speed);
    if (propulsion_power(pm, cruise) > pm.max_power)
        throw domain_error("plan_relay: cruise power exceeds the platform power limit");

    RelayPlan plan;
    plan.tx_power_dbm = pt;
    plan.altitude_m = slice.z;
    plan.center = anchor;
    plan.waypoints = chosen.waypoints;
    plan.cycle = chosen.cycle;
    plan.cycle_length_m = chosen.cycle_length_m;
    plan.cruise_speed_mps = cruise;
    plan.variant = chosen.variant;
    plan.links = std::move(links);
    plan.slice_point_count = slice.points.size();
    if (region_out)
        *region_out = std::move(region);
    return plan;
}

} // namespace erep
