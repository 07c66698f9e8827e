#include "erep/scenario.hpp"

namespace erep {

void validate(const Scenario& scenario) {
    if (scenario.faps.size() < 2)
        throw invalid_input_error("scenario: need at least two FAPs");
    for (const auto& fap : scenario.faps) {
        if (!(fap.demand_bps > 0))
            throw invalid_input_error("scenario: FAP demand must be positive");
        if (fap.position.z < 0)
            throw invalid_input_error("scenario: FAP altitude must be non-negative");
    }
    for (std::size_t i = 0; i < scenario.faps.size(); ++i)
        for (std::size_t j = i + 1; j < scenario.faps.size(); ++j) {
            const auto& a = scenario.faps[i].position;
            const auto& b = scenario.faps[j].position;
            if (a.x == b.x && a.y == b.y && a.z == b.z)
                throw invalid_input_error("scenario: coincident FAP positions");
        }
    validate(scenario.radio);
    derive_power_model(scenario.uav); // throws on bad airframe constants
}

} // namespace erep
