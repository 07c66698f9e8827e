#pragma once

#include "erep/scenario.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace erep {

struct SweepConfig {
    std::vector<int> fap_counts{2, 5, 10, 20};
    int runs_per_count = 160;
    Point3 region{50.0, 50.0, 20.0}; // box extents, meters
    std::uint64_t master_seed = 42;
    double min_separation_m = 1.0;
    double resolution_m = 0.5;
};

// Total offered load shared by all FAPs: 500 Mbit/s, split into equal
// per-FAP shares. Keeping the total below the 780 Mbit/s top rate leaves
// headroom for the fair-share MCS pick at every benchmark FAP count.
double default_total_demand_bps();

// Stream seed for one (fap_count, run) cell. Mixing the indices through
// the seed keeps every scenario independent of generation order, so sweeps
// may evaluate cells in any order or in parallel.
std::uint64_t scenario_seed(std::uint64_t master_seed, int fap_count, int run_index);

// FAP positions i.i.d. uniform over the region box, re-drawn until all
// pairwise separations reach min_separation. Deterministic in (n_faps,
// region, seed). Radio and airframe take the library defaults; demands
// follow the equal-share rule. Throws invalid_input_error for n_faps < 2,
// domain_error when 10^4 draws cannot satisfy the separation.
Scenario random_scenario(int n_faps, const Point3& region, std::uint64_t seed,
                         double min_separation_m = 1.0);

// The six fixed benchmark layouts (two close/far pairs, five close/far,
// ten close/far), demands per the equal-share rule, radio at the 20 dBm
// operating point.
std::vector<Scenario> builtin_scenarios();

// Reference endurance gains for the six layouts, in percent, printed next
// to freshly computed results in the table output.
const std::array<double, 6>& builtin_reference_gains();

} // namespace erep
