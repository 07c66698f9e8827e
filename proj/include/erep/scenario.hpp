#pragma once

#include "erep/geometry.hpp"
#include "erep/link_budget.hpp"
#include "erep/power_model.hpp"

#include <vector>

namespace erep {

struct Fap {
    Point3 position;
    double demand_bps = 0;
};

// One planning problem: the FAPs to serve plus the radio and airframe the
// relay flies with.
struct Scenario {
    std::vector<Fap> faps;
    RadioConfig radio;
    UavPhysicalParams uav;
};

// At least two FAPs, positive demands, no coincident positions.
// Throws invalid_input_error.
void validate(const Scenario& scenario);

} // namespace erep
