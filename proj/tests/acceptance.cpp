// Release checklist for the relay planner, one numbered criterion per run.
// Usage: acceptance_tests [N]  (no argument runs all ten)
// Each criterion prints exactly one PASS/FAIL line; the exit code is 0 only
// when every criterion that ran passed.

#include "erep/cli.hpp"
#include "erep/endurance.hpp"
#include "erep/geometry.hpp"
#include "erep/json_io.hpp"
#include "erep/link_budget.hpp"
#include "erep/planner.hpp"
#include "erep/power_model.hpp"
#include "erep/reporting.hpp"
#include "erep/scenario_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

using namespace erep;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string format(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return buf;
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

struct BenchmarkRun {
    Scenario scenario;
    RelayPlan plan;
    double gain_pct;
};

// The six fixed layouts, planned once per process and reused across criteria.
const std::vector<BenchmarkRun>& benchmark_runs() {
    static const std::vector<BenchmarkRun> runs = [] {
        std::vector<BenchmarkRun> out;
        for (const Scenario& sc : builtin_scenarios()) {
            BenchmarkRun run;
            run.scenario = sc;
            run.plan = plan_relay(sc, 0.5);
            const PowerModel pm = derive_power_model(sc.uav);
            run.gain_pct = cycle_stats(run.plan, pm, sc).gain_pct;
            out.push_back(std::move(run));
        }
        return out;
    }();
    return runs;
}

const std::vector<SweepRecord>& default_sweep() {
    static const std::vector<SweepRecord> records = run_sweep(SweepConfig{});
    return records;
}

// 1. Hover power of the stock airframe.
Outcome criterion_1() {
    const double hover = hover_power(derive_power_model(UavPhysicalParams{}));
    const bool pass = std::fabs(hover - 168.49) <= 0.15;
    return {pass, format("hover power %.3f W vs 168.49 +/- 0.15 W", hover)};
}

// 2. Power-optimal cruise speed, strictly cheaper than hovering.
Outcome criterion_2() {
    const PowerModel pm = derive_power_model(UavPhysicalParams{});
    const OptimalSpeed opt = optimal_speed(pm);
    const bool pass = std::fabs(opt.speed - 10.2) <= 0.2 && opt.power < hover_power(pm);
    return {pass, format("optimal speed %.3f m/s at %.3f W, hover %.3f W", opt.speed,
                         opt.power, hover_power(pm))};
}

// 3. Shape of the power curve: falling up to 8 m/s, rising from 13 m/s.
Outcome criterion_3() {
    const PowerModel pm = derive_power_model(UavPhysicalParams{});
    for (int i = 0; i < 80; ++i)
        if (!(propulsion_power(pm, (i + 1) / 10.0) < propulsion_power(pm, i / 10.0)))
            return {false, format("power not strictly falling at %.1f m/s", i / 10.0)};
    for (int i = 130; i < 300; ++i)
        if (!(propulsion_power(pm, (i + 1) / 10.0) > propulsion_power(pm, i / 10.0)))
            return {false, format("power not strictly rising at %.1f m/s", i / 10.0)};
    if (!(propulsion_power(pm, 30.0) > propulsion_power(pm, 0.0)))
        return {false, "top-speed power does not exceed hover power"};
    return {true, "strictly falling on [0,8], strictly rising on [13,30], P(30) > P(0)"};
}

// 4. MCS pick under the fair-share rule at the ladder's end rows.
Outcome criterion_4() {
    const McsTable table = default_mcs_table();
    const McsRow low = target_mcs(29e6, 2, table);
    const McsRow high = target_mcs(390e6, 2, table);
    const bool pass = low.index == 0 && low.min_snr_db == 11.0 &&
                      low.data_rate_bps == 58.5e6 && high.index == 9 &&
                      high.min_snr_db == 38.0 && high.data_rate_bps == 780e6;
    return {pass, format("29 Mbit/s x2 -> MCS%d (%.0f dB, %.1f Mbit/s); "
                         "390 Mbit/s x2 -> MCS%d (%.0f dB, %.1f Mbit/s)",
                         low.index, low.min_snr_db, low.data_rate_bps / 1e6, high.index,
                         high.min_snr_db, high.data_rate_bps / 1e6)};
}

// 5. Voxelization agrees with the analytic membership test on random
// overlapping sphere pairs at 0.25 m resolution.
Outcome criterion_5() {
    std::mt19937_64 gen(5);
    const double res = 0.25;
    long long checked = 0, mismatches = 0;
    for (int pair = 0; pair < 200; ++pair) {
        const double r1 = 1.0 + 3.0 * uniform01(gen);
        const double r2 = 1.0 + 3.0 * uniform01(gen);
        const Point3 c1{10.0 * uniform01(gen), 10.0 * uniform01(gen),
                        0.5 + 7.5 * uniform01(gen)};
        const double theta = 2.0 * 3.14159265358979323846 * uniform01(gen);
        const double phi = std::acos(2.0 * uniform01(gen) - 1.0);
        const double d = (0.15 + 0.8 * uniform01(gen)) * (r1 + r2);
        const Point3 c2{c1.x + d * std::sin(phi) * std::cos(theta),
                        c1.y + d * std::sin(phi) * std::sin(theta),
                        c1.z + d * std::cos(phi)};
        const std::vector<Point3> centers{c1, c2};
        const std::vector<double> radii{r1, r2};
        const VoxelRegion region = intersect_spheres(centers, radii, res);

        const Point3 lo{std::min(c1.x - r1, c2.x - r2), std::min(c1.y - r1, c2.y - r2),
                        std::min(c1.z - r1, c2.z - r2)};
        const Point3 hi{std::max(c1.x + r1, c2.x + r2), std::max(c1.y + r1, c2.y + r2),
                        std::max(c1.z + r1, c2.z + r2)};
        std::unordered_set<long long> present;
        for (const Point3& p : region.points) {
            const long long ix = std::llround((p.x - lo.x) / res);
            const long long iy = std::llround((p.y - lo.y) / res);
            const long long iz = std::llround((p.z - lo.z) / res);
            present.insert((ix * 2048 + iy) * 2048 + iz);
        }
        long long matched = 0;
        const long long nx = static_cast<long long>(std::floor((hi.x - lo.x) / res + 1e-9));
        const long long ny = static_cast<long long>(std::floor((hi.y - lo.y) / res + 1e-9));
        const long long nz = static_cast<long long>(std::floor((hi.z - lo.z) / res + 1e-9));
        const long long iz0 =
            lo.z < 0 ? static_cast<long long>(std::ceil((0.0 - lo.z) / res - 1e-9)) : 0;
        for (long long ix = 0; ix <= nx; ++ix)
            for (long long iy = 0; iy <= ny; ++iy)
                for (long long iz = iz0; iz <= nz; ++iz) {
                    const double x = lo.x + res * static_cast<double>(ix);
                    const double y = lo.y + res * static_cast<double>(iy);
                    const double z = lo.z + res * static_cast<double>(iz);
                    const double d1 = (x - c1.x) * (x - c1.x) + (y - c1.y) * (y - c1.y) +
                                      (z - c1.z) * (z - c1.z);
                    const double d2 = (x - c2.x) * (x - c2.x) + (y - c2.y) * (y - c2.y) +
                                      (z - c2.z) * (z - c2.z);
                    const bool inside = d1 <= r1 * r1 && d2 <= r2 * r2;
                    const bool listed = present.count((ix * 2048 + iy) * 2048 + iz) > 0;
                    ++checked;
                    if (inside)
                        ++matched;
                    if (inside != listed)
                        ++mismatches;
                }
        // every region point must also have been visited by the scan above
        if (matched != static_cast<long long>(region.points.size()))
            ++mismatches;
    }
    return {mismatches == 0, format("200 sphere pairs, %lld lattice points, %lld disagreements",
                                    checked, mismatches)};
}

// 6. Every produced plan keeps each link inside its budget along the whole
// cycle, up to the one-voxel quantization allowance.
Outcome criterion_6() {
    const SweepConfig cfg;
    std::vector<std::pair<int, int>> cells;
    for (int count : cfg.fap_counts)
        for (int run = 0; run < cfg.runs_per_count; ++run)
            cells.emplace_back(count, run);

    std::vector<double> slack(cells.size(), std::numeric_limits<double>::quiet_NaN());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
        const auto [count, run] = cells[static_cast<std::size_t>(i)];
        const Scenario sc = random_scenario(count, cfg.region,
                                            scenario_seed(cfg.master_seed, count, run),
                                            cfg.min_separation_m);
        try {
            const RelayPlan plan = plan_relay(sc, cfg.resolution_m);
            const LinkCheck check = verify_link_budget(plan, sc, 0.1);
            slack[static_cast<std::size_t>(i)] =
                check.min_snr_margin_db + grid_margin_db(plan, sc, cfg.resolution_m);
        } catch (const erep::error&) {
            // infeasible cells produce no plan, so there is nothing to check
        }
    }

    long long plans = 0, violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (double s : slack) {
        if (std::isnan(s))
            continue;
        ++plans;
        worst = std::min(worst, s);
        if (s < 0)
            ++violations;
    }
    for (const BenchmarkRun& run : benchmark_runs()) {
        const LinkCheck check = verify_link_budget(run.plan, run.scenario, 0.1);
        const double s = check.min_snr_margin_db +
                         grid_margin_db(run.plan, run.scenario, 0.5);
        ++plans;
        worst = std::min(worst, s);
        if (s < 0)
            ++violations;
    }
    return {violations == 0 && plans > 0,
            format("%lld plans sampled at 0.1 m, %lld budget violations, "
                   "worst slack %.4f dB",
                   plans, violations, worst)};
}

// 7. Benchmark table: clustered beats spread at every FAP count, and each
// gain lands within 6 points of its reference value.
Outcome criterion_7() {
    const std::vector<BenchmarkRun>& runs = benchmark_runs();
    const std::array<double, 6>& ref = builtin_reference_gains();
    std::string problems;
    for (int count = 0; count < 3; ++count) {
        const double close = runs[2 * count].gain_pct;
        const double far = runs[2 * count + 1].gain_pct;
        if (!(close > far))
            problems += format("%slayout %d gain %.2f%% not above layout %d gain %.2f%%",
                               problems.empty() ? "" : "; ", 2 * count + 1, close,
                               2 * count + 2, far);
    }
    for (std::size_t i = 0; i < runs.size(); ++i)
        if (std::fabs(runs[i].gain_pct - ref[i]) > 6.0)
            problems += format("%slayout %zu gain %.2f%% outside %.0f +/- 6",
                               problems.empty() ? "" : "; ", i + 1, runs[i].gain_pct, ref[i]);
    if (!problems.empty())
        return {false, problems};
    return {true, format("gains %.2f/%.2f/%.2f/%.2f/%.2f/%.2f%%, ordered and within bands",
                         runs[0].gain_pct, runs[1].gain_pct, runs[2].gain_pct,
                         runs[3].gain_pct, runs[4].gain_pct, runs[5].gain_pct)};
}

// 8. Randomized sweep statistics sit in the expected bands and stay flat
// across FAP counts.
Outcome criterion_8() {
    const std::vector<SummaryRow> rows = summarize(default_sweep());
    double mean_lo = 1e9, mean_hi = -1e9, p95_lo = 1e9, p95_hi = -1e9;
    for (const SummaryRow& row : rows) {
        if (!(row.mean >= 5.0 && row.mean <= 11.0))
            return {false, format("%d FAPs: mean gain %.2f%% outside [5, 11]", row.fap_count,
                                  row.mean)};
        if (!(row.p95 >= 9.0 && row.p95 <= 16.0))
            return {false, format("%d FAPs: p95 gain %.2f%% outside [9, 16]", row.fap_count,
                                  row.p95)};
        mean_lo = std::min(mean_lo, row.mean);
        mean_hi = std::max(mean_hi, row.mean);
        p95_lo = std::min(p95_lo, row.p95);
        p95_hi = std::max(p95_hi, row.p95);
    }
    if (rows.size() != 4)
        return {false, format("expected 4 summary rows, got %zu", rows.size())};
    if (mean_hi - mean_lo >= 4.0 || p95_hi - p95_lo >= 4.0)
        return {false, format("per-count statistics drift: means span %.2f, p95 span %.2f",
                              mean_hi - mean_lo, p95_hi - p95_lo)};
    return {true, format("means %.2f..%.2f%%, p95 %.2f..%.2f%% across 4 counts", mean_lo,
                         mean_hi, p95_lo, p95_hi)};
}

// 9. Endurance gain is a pure power ratio: battery capacity divides out,
// and a cycle of zero length reports exactly zero gain.
Outcome criterion_9() {
    const double avg = 147.43191125816224, hover = 168.45984307835965;
    const double gain = endurance_gain(avg, hover);
    for (double capacity : {1.0, 50.0, 10000.0}) {
        const double ratio_gain = 100.0 * ((capacity / avg) / (capacity / hover) - 1.0);
        if (std::fabs(ratio_gain - gain) > 1e-12 * std::fabs(gain))
            return {false, format("capacity %.0f J changes the gain by %.3e", capacity,
                                  ratio_gain - gain)};
    }

    const Scenario sc = builtin_scenarios()[0];
    const PowerModel pm = derive_power_model(sc.uav);
    RelayPlan still;
    still.tx_power_dbm = 20.0;
    still.altitude_m = 10.0;
    still.center = {0.5, 0.0};
    still.waypoints.fill(still.center);
    still.cycle.fill(still.center);
    still.cycle_length_m = 0.0;
    still.cruise_speed_mps = optimal_speed(pm).speed;
    for (std::size_t i = 0; i < sc.faps.size(); ++i)
        still.links.push_back({6, 30.0,
                               max_range(still.tx_power_dbm, sc.radio.frequency_hz,
                                         sc.radio.noise_dbm, 30.0)});
    const EnduranceReport rep = cycle_stats(still, pm, sc);
    if (rep.gain_pct != 0.0 || rep.avg_power_w != rep.hover_power_w)
        return {false, format("zero-length cycle: gain %.17g%%, avg %.17g vs hover %.17g W",
                              rep.gain_pct, rep.avg_power_w, rep.hover_power_w)};
    return {true, "gain is capacity-free and exactly 0 for a zero-length cycle"};
}

// 10. Nothing produced anywhere approaches the hard 74% bound.
Outcome criterion_10() {
    const PowerModel pm = derive_power_model(UavPhysicalParams{});
    double worst = endurance_gain(optimal_speed(pm).power, hover_power(pm));
    for (const BenchmarkRun& run : benchmark_runs())
        worst = std::max(worst, run.gain_pct);
    for (const SweepRecord& rec : default_sweep())
        if (rec.status == "ok")
            worst = std::max(worst, rec.gain_pct);
    return {worst < 74.0, format("largest gain anywhere %.3f%%, bound 74%%", worst)};
}

Outcome run_criterion(int n) {
    switch (n) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    default: return criterion_10();
    }
}

} // namespace

int main(int argc, char** argv) {
    int first = 1, last = 10;
    if (argc == 2) {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > 10) {
            std::fprintf(stderr, "usage: %s [1..10]\n", argv[0]);
            return 2;
        }
        first = last = n;
    } else if (argc > 2) {
        std::fprintf(stderr, "usage: %s [1..10]\n", argv[0]);
        return 2;
    }

    int failures = 0;
    for (int n = first; n <= last; ++n) {
        Outcome outcome{false, "unexpected exception"};
        try {
            outcome = run_criterion(n);
        } catch (const std::exception& e) {
            outcome.detail = format("unexpected exception: %s", e.what());
        }
        std::printf("[%d] %s: %s\n", n, outcome.pass ? "PASS" : "FAIL",
                    outcome.detail.c_str());
        if (!outcome.pass)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
