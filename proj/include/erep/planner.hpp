#pragma once

#include "erep/geometry.hpp"
#include "erep/link_budget.hpp"
#include "erep/power_model.hpp"
#include "erep/scenario.hpp"

#include <array>
#include <functional>
#include <vector>

namespace erep {

// Link assignment for one FAP under the fair-share rule.
struct FapLink {
    int mcs_index = 0;
    double min_snr_db = 0;   // SNR the chosen MCS needs
    double range_m = 0;      // sphere radius at the planned transmit power
};

struct RelayPlan {
    double tx_power_dbm = 0;
    double altitude_m = 0;          // z of the chosen slice
    Point2 center;                  // slice centroid, the cycle anchor
    std::array<Point2, 4> waypoints;
    std::array<Point2, 7> cycle;    // anchor, w0, w1, anchor, w2, w3, anchor
    double cycle_length_m = 0;
    double cruise_speed_mps = 0;
    int variant = 0;                // which extreme-point query won, 1-based
    std::vector<FapLink> links;     // one per FAP, scenario order
    std::size_t slice_point_count = 0;
};

// Candidate trajectory for one extreme-point query, before selection.
struct TrajectoryCandidate {
    int variant = 0;
    std::array<Point2, 4> waypoints;
    std::array<Point2, 7> cycle;
    double cycle_length_m = 0;
};

// Orders four corner points for clockwise traversal: the start is the
// highest point (ties toward larger x), the rest follow by decreasing angle
// around the four-point mean. Duplicates of the start collapse onto it, so
// degenerate slices fall out as back-and-forth paths.
std::array<Point2, 4> clockwise_waypoints(const std::array<Point2, 4>& corners);

// The three candidate trajectories for a slice: corners at the x extremes of
// the top and bottom rows, at the y extremes of the outer columns, and on the
// row/column through the centroid.
std::vector<TrajectoryCandidate> candidate_trajectories(const std::vector<Point2>& slice,
                                                        const Point2& centroid);

// Longest cycle wins; equal lengths resolve to the lowest variant index.
const TrajectoryCandidate& select_trajectory(const std::vector<TrajectoryCandidate>& candidates);

// Fallback for a waypoint that lands exactly on a FAP: one lattice step
// toward the anchor, trying the dominant axis, then the other axis, then a
// direct nudge, keeping the point inside every range sphere. Returns the
// input unchanged when no candidate is clear.
Point2 displace_waypoint(const Point2& waypoint, const Point2& anchor, double z,
                         double resolution, const std::vector<Point3>& centers,
                         const std::vector<double>& radii);

// Full planning pass: fair-share MCS per FAP, transmit-power escalation until
// the range spheres share voxels, slice/centroid/waypoint construction, and
// the cruise-speed cap. `warn` (optional) receives a message when escalation
// passes the radio's nominal 20 dBm operating power.
//
// Throws infeasible_demand_error when some FAP's fair share exceeds the top
// MCS rate, no_intersection_error when the power cap is reached with no
// common voxel, domain_error when cruise power exceeds the platform limit,
// invalid_input_error on malformed scenarios. `region_out`, when given,
// receives the voxel region at the accepted power (for diagnostics dumps).
RelayPlan plan_relay(const Scenario& scenario,
                     double resolution = 0.5,
                     const std::function<void(const std::string&)>& warn = {},
                     VoxelRegion* region_out = nullptr);

} // namespace erep
