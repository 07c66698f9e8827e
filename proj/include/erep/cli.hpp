#pragma once

#include "erep/reporting.hpp"
#include "erep/scenario_gen.hpp"

#include <vector>

namespace erep {

// Evaluates every (fap_count, run) cell of the sweep and returns records
// ordered by count (as configured) then run index. Cells are independent,
// carry their own RNG streams, and are evaluated in parallel when the build
// has OpenMP; the output is identical either way. Scenarios the planner
// rejects come back with a non-ok status instead of aborting the sweep.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

// Command-line entry point. Returns 0 on success, 1 when a scenario is
// infeasible (demand beyond the top MCS or no coverage overlap under the
// power cap), 2 on input or I/O problems. Diagnostics go to stderr, data to
// stdout or the requested files.
int run(int argc, const char* const* argv);

} // namespace erep
