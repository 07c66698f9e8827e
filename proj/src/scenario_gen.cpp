#include "erep/scenario_gen.hpp"

#include <cmath>
#include <random>

namespace erep {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw; avoids
// std::uniform_real_distribution, whose output is implementation-defined.
double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

constexpr int kMaxDrawAttempts = 10000;

Scenario make_scenario(std::vector<Point3> positions, double tx_power_initial_dbm) {
    Scenario sc;
    sc.radio = default_radio_config();
    sc.radio.tx_power_initial_dbm = tx_power_initial_dbm;
    const double share = default_total_demand_bps() / static_cast<double>(positions.size());
    sc.faps.reserve(positions.size());
    for (const auto& p : positions)
        sc.faps.push_back({p, share});
    return sc;
}

} // namespace

double default_total_demand_bps() {
    return 500e6;
}

std::uint64_t scenario_seed(std::uint64_t master_seed, int fap_count, int run_index) {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(fap_count));
    h = splitmix64(h ^ static_cast<std::uint64_t>(run_index));
    return h;
}

Scenario random_scenario(int n_faps, const Point3& region, std::uint64_t seed,
                         double min_separation_m) {
    if (n_faps < 2)
        throw invalid_input_error("random_scenario: need at least two FAPs");
    if (!(region.x > 0) || !(region.y > 0) || !(region.z > 0))
        throw invalid_input_error("random_scenario: region extents must be positive");

    std::mt19937_64 gen(seed);
    std::vector<Point3> positions;
    positions.reserve(static_cast<std::size_t>(n_faps));
    int attempts = 0;
    while (positions.size() < static_cast<std::size_t>(n_faps)) {
        if (++attempts > kMaxDrawAttempts)
            throw domain_error("random_scenario: separation unreachable in this region");
        Point3 p{uniform01(gen) * region.x, uniform01(gen) * region.y, uniform01(gen) * region.z};
        bool ok = true;
        for (const auto& q : positions) {
            const double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
            if (std::sqrt(dx * dx + dy * dy + dz * dz) < min_separation_m) {
                ok = false;
                break;
            }
        }
        if (ok)
            positions.push_back(p);
    }
    return make_scenario(std::move(positions), default_radio_config().tx_power_initial_dbm);
}

std::vector<Scenario> builtin_scenarios() {
    // Two-FAP adjacent and far-apart pairs, then five and ten FAPs in
    // clustered and spread placements; the spread cases are the hard ones.
    static const std::vector<std::vector<Point3>> layouts = {
        {{0, 0, 10}, {1, 0, 10}},
        {{0, 0, 10}, {58, 0, 10}},
        {{19, 40, 12}, {1, 0, 10}, {7, 17, 17}, {9, 16, 7}, {10, 36, 13}},
        {{30, 32, 2}, {3, 45, 0}, {43, 4, 6}, {23, 3, 7}, {2, 16, 15}},
        {{20, 25, 18}, {9, 20, 17}, {20, 13, 5}, {24, 35, 13}, {20, 40, 7},
         {35, 42, 12}, {41, 30, 15}, {40, 25, 1}, {14, 43, 17}, {29, 19, 13}},
        {{41, 48, 14}, {44, 3, 15}, {16, 4, 3}, {11, 9, 2}, {40, 36, 5},
         {24, 35, 15}, {29, 40, 8}, {46, 32, 14}, {3, 11, 16}, {25, 27, 6}},
    };
    std::vector<Scenario> out;
    out.reserve(layouts.size());
    for (const auto& layout : layouts)
        out.push_back(make_scenario(layout, 20.0));
    return out;
}

const std::array<double, 6>& builtin_reference_gains() {
    static const std::array<double, 6> gains = {26, 7, 19, 4, 20, 5};
    return gains;
}

} // namespace erep
