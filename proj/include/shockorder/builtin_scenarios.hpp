#pragma once

#include <span>
#include <string>

#include "shockorder/scenario_io.hpp"

namespace shockorder {

// The four bundled reference scenarios (fig1..fig4), each paired with the
// theorem whose hypotheses it satisfies.
struct BuiltinScenario {
    std::string name;
    TheoremId matching_theorem;
    ScenarioConfig config;
};

std::span<const std::string> builtin_names();
const BuiltinScenario& builtin_scenario(const std::string& name);  // throws on unknown name

}  // namespace shockorder
