#include "erep/cli.hpp"

#include "erep/endurance.hpp"
#include "erep/json_io.hpp"
#include "erep/planner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

namespace erep {
namespace {

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

void warn_to_stderr(const std::string& msg) {
    std::cerr << "warning: " << msg << "\n";
}

int cmd_power_curve(const std::string& params_path, double v_min, double v_max,
                    double v_step, const std::string& out_path) {
    UavPhysicalParams uav;
    if (!params_path.empty())
        uav = uav_params_from_json(read_file(params_path));
    const PowerModel pm = derive_power_model(uav);
    if (!(v_step > 0) || v_min < 0 || v_max < v_min)
        throw invalid_input_error("power-curve: need 0 <= min <= max and step > 0");
    std::string csv = "speed_mps,power_w\n";
    const long long steps = static_cast<long long>(std::floor((v_max - v_min) / v_step + 1e-9));
    for (long long k = 0; k <= steps; ++k) {
        const double v = std::min(v_min + static_cast<double>(k) * v_step, v_max);
        csv += fixed4(v);
        csv += ',';
        csv += fixed4(propulsion_power(pm, v));
        csv += '\n';
    }
    emit(out_path, csv);
    return 0;
}

std::string region_csv(const VoxelRegion& region) {
    std::string csv = "x,y,z\n";
    for (const auto& p : region.points) {
        csv += fixed4(p.x);
        csv += ',';
        csv += fixed4(p.y);
        csv += ',';
        csv += fixed4(p.z);
        csv += '\n';
    }
    return csv;
}

int cmd_plan(const std::string& scenario_path, double resolution,
             const std::string& dump_region_path, const std::string& out_path) {
    const Scenario sc = load_scenario(scenario_path);
    VoxelRegion region;
    const RelayPlan plan =
        plan_relay(sc, resolution, warn_to_stderr, dump_region_path.empty() ? nullptr : &region);
    if (!dump_region_path.empty())
        write_file(dump_region_path, region_csv(region));
    emit(out_path, plan_to_json(plan));
    return 0;
}

int cmd_verify(const std::string& scenario_path, const std::string& plan_path,
               double resolution, double sample_step, const std::string& out_path) {
    const Scenario sc = load_scenario(scenario_path);
    const RelayPlan plan = plan_path.empty() ? plan_relay(sc, resolution, warn_to_stderr)
                                             : plan_from_json(read_file(plan_path));
    const PowerModel pm = derive_power_model(sc.uav);
    const EnduranceReport rep = cycle_stats(plan, pm, sc, 6.0, sample_step);
    const LinkCheck check = verify_link_budget(plan, sc, sample_step);
    nlohmann::json doc = {
        {"cycle_length_m", rep.cycle_length_m},
        {"cycle_time_s", rep.cycle_time_s},
        {"cycle_energy_j", rep.cycle_energy_j},
        {"avg_power_w", rep.avg_power_w},
        {"hover_power_w", rep.hover_power_w},
        {"gain_pct", rep.gain_pct},
        {"min_snr_margin_db", check.min_snr_margin_db},
        {"hover_seconds_per_cycle", rep.hover_seconds_per_cycle},
        {"worst_point",
         nlohmann::json::array({check.worst_point.x, check.worst_point.y, check.worst_point.z})},
        {"worst_fap", check.worst_fap},
    };
    emit(out_path, doc.dump(2) + "\n");
    return 0;
}

int cmd_sweep(const SweepConfig& config, const std::string& out_path,
              const std::string& records_path, const std::string& format) {
    const std::vector<SweepRecord> records = run_sweep(config);
    const std::vector<SummaryRow> summary = summarize(records);
    const bool json = format == "json";
    emit(out_path, json ? summary_json(summary) : summary_csv(summary));
    if (!records_path.empty())
        write_file(records_path, json ? records_json(records) : records_csv(records));
    return 0;
}

int cmd_table4(double resolution, const std::string& out_path) {
    const std::vector<Scenario> scenarios = builtin_scenarios();
    const auto& reference = builtin_reference_gains();
    static const char* labels[6] = {"2 FAPs adjacent", "2 FAPs far apart",
                                    "5 FAPs clustered", "5 FAPs spread",
                                    "10 FAPs clustered", "10 FAPs spread"};
    std::ostringstream out;
    out << "scenario            faps   gain_pct   reference_pct\n";
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const Scenario& sc = scenarios[i];
        const RelayPlan plan = plan_relay(sc, resolution, warn_to_stderr);
        const PowerModel pm = derive_power_model(sc.uav);
        const EnduranceReport rep = cycle_stats(plan, pm, sc);
        char line[128];
        std::snprintf(line, sizeof line, "%-18s %5zu %10.4f %15.1f\n", labels[i],
                      sc.faps.size(), rep.gain_pct, reference[i]);
        out << line;
    }
    emit(out_path, out.str());
    return 0;
}

} // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    if (config.runs_per_count < 1)
        throw invalid_input_error("sweep: runs_per_count must be >= 1");
    if (config.fap_counts.empty())
        throw invalid_input_error("sweep: no FAP counts");

    const std::size_t runs = static_cast<std::size_t>(config.runs_per_count);
    const std::size_t jobs = config.fap_counts.size() * runs;
    std::vector<SweepRecord> records(jobs);

    // Cells are pure functions of (master_seed, count, run), so a dynamic
    // schedule cannot change the result, only the wall time.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long j = 0; j < static_cast<long long>(jobs); ++j) {
        const std::size_t ci = static_cast<std::size_t>(j) / runs;
        const int run = static_cast<int>(static_cast<std::size_t>(j) % runs);
        const int count = config.fap_counts[ci];
        SweepRecord& rec = records[static_cast<std::size_t>(j)];
        rec.fap_count = count;
        rec.run = run;
        try {
            const Scenario sc =
                random_scenario(count, config.region,
                                scenario_seed(config.master_seed, count, run),
                                config.min_separation_m);
            const RelayPlan plan = plan_relay(sc, config.resolution_m);
            const PowerModel pm = derive_power_model(sc.uav);
            const EnduranceReport rep = cycle_stats(plan, pm, sc);
            rec.gain_pct = rep.gain_pct;
            rec.tx_power_dbm = plan.tx_power_dbm;
            rec.cycle_length_m = plan.cycle_length_m;
        } catch (const infeasible_demand_error&) {
            rec.status = "infeasible-demand";
        } catch (const no_intersection_error&) {
            rec.status = "no-intersection";
        }
    }
    return records;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Energy-aware relay positioning for a rotary-wing UAV"};
    app.require_subcommand(1);

    std::string params_path, scenario_path, plan_path, out_path, records_path, dump_path;
    std::string format = "csv";
    double v_min = 0.0, v_max = 30.0, v_step = 0.1;
    double resolution = 0.5, sample_step = 0.1;
    SweepConfig sweep;
    std::vector<double> region_box = {50.0, 50.0, 20.0};

    auto* curve = app.add_subcommand("power-curve", "Propulsion power vs forward speed, as CSV");
    curve->add_option("--params", params_path, "JSON with airframe constants (whole scenario files work)");
    curve->add_option("--min", v_min, "lowest speed, m/s")->capture_default_str();
    curve->add_option("--max", v_max, "highest speed, m/s")->capture_default_str();
    curve->add_option("--step", v_step, "speed step, m/s")->capture_default_str();
    curve->add_option("--out", out_path, "output file (default stdout)");

    auto* plan = app.add_subcommand("plan", "Plan the relay trajectory for a scenario");
    plan->add_option("--scenario", scenario_path, "scenario JSON")->required();
    plan->add_option("--resolution", resolution, "voxel lattice step, m")->capture_default_str();
    plan->add_option("--dump-region", dump_path, "also write the voxel region as CSV");
    plan->add_option("--out", out_path, "plan JSON output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check the link budget along the planned cycle");
    verify->add_option("--scenario", scenario_path, "scenario JSON")->required();
    verify->add_option("--plan", plan_path, "plan JSON to verify (default: plan now)");
    verify->add_option("--resolution", resolution, "voxel lattice step, m")->capture_default_str();
    verify->add_option("--sample-step", sample_step, "path sampling interval, m")->capture_default_str();
    verify->add_option("--out", out_path, "report output file (default stdout)");

    auto* sw = app.add_subcommand("sweep", "Random-scenario sweep with percentile summary");
    sw->add_option("--counts", sweep.fap_counts, "FAP counts")->delimiter(',')->capture_default_str();
    sw->add_option("--runs", sweep.runs_per_count, "scenarios per count")->capture_default_str();
    sw->add_option("--seed", sweep.master_seed, "master seed")->capture_default_str();
    sw->add_option("--region", region_box, "region extents x,y,z in m")->delimiter(',')->expected(3);
    sw->add_option("--resolution", sweep.resolution_m, "voxel lattice step, m")->capture_default_str();
    sw->add_option("--min-sep", sweep.min_separation_m, "minimum FAP separation, m")->capture_default_str();
    sw->add_option("--out", out_path, "summary output file (default stdout)");
    sw->add_option("--records-out", records_path, "also write per-scenario records");
    sw->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    auto* t4 = app.add_subcommand("table4", "Built-in benchmark scenarios vs reference gains");
    t4->add_option("--resolution", resolution, "voxel lattice step, m")->capture_default_str();
    t4->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (curve->parsed())
            return cmd_power_curve(params_path, v_min, v_max, v_step, out_path);
        if (plan->parsed())
            return cmd_plan(scenario_path, resolution, dump_path, out_path);
        if (verify->parsed())
            return cmd_verify(scenario_path, plan_path, resolution, sample_step, out_path);
        if (sw->parsed()) {
            sweep.region = {region_box[0], region_box[1], region_box[2]};
            return cmd_sweep(sweep, out_path, records_path, format);
        }
        if (t4->parsed())
            return cmd_table4(resolution, out_path);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const infeasible_demand_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const no_intersection_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace erep
