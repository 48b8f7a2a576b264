#include "shockorder/builtin_scenarios.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace shockorder {

namespace {

ScenarioConfig make(GeneratorFamily gf, double theta_x, double theta_y, SurvivalFamily family,
                    std::vector<double> alpha, std::vector<double> beta,
                    std::vector<double> shocks, Structure structure) {
    return ScenarioConfig{Scenario(ArchimedeanGenerator(gf, theta_x),
                                   ArchimedeanGenerator(gf, theta_y), family,
                                   ParamVector(std::move(alpha)), ParamVector(std::move(beta)),
                                   ParamVector(std::move(shocks)), structure),
                          {}};
}

const std::array<BuiltinScenario, 4>& table() {
    static const std::array<BuiltinScenario, 4> scenarios{{
        // parallel, exponential means, AMH pair
        {"fig1", TheoremId::T3_1,
         make(GeneratorFamily::Amh, 0.2, 0.75, SurvivalFamily::exponential_mean(),
              {10.0, 3.0, 1.0}, {3.0, 2.0, 1.0}, {0.8, 0.3, 0.2}, Structure::Parallel)},
        // parallel, Weibull rate with shape 2, Gumbel-Barnett pair
        {"fig2", TheoremId::T3_2,
         make(GeneratorFamily::GumbelBarnett, 0.6, 0.3, SurvivalFamily::weibull_scale_rate(2.0),
              {8.0, 5.0, 1.0}, {7.0, 4.0, 3.0}, {0.1, 0.4, 0.9}, Structure::Parallel)},
        // series, log-logistic with shape 2, Gumbel pair
        {"fig3", TheoremId::T3_3,
         make(GeneratorFamily::Gumbel, 3.0, 15.0, SurvivalFamily::log_logistic_scale(2.0),
              {7.0, 4.0, 1.0}, {7.0, 3.0, 2.0}, {0.6, 0.4, 0.1}, Structure::Series)},
        // series, Weibull rate with shape 3, Gumbel-Hougaard pair
        {"fig4", TheoremId::T3_4,
         make(GeneratorFamily::GumbelHougaard, 9.0, 2.0, SurvivalFamily::weibull_scale_rate(3.0),
              {8.0, 6.0, 2.0}, {9.0, 4.0, 2.0}, {0.1, 0.2, 0.7}, Structure::Series)},
    }};
    return scenarios;
}

const std::array<std::string, 4> kNames{"fig1", "fig2", "fig3", "fig4"};

}  // namespace

std::span<const std::string> builtin_names() { return kNames; }

const BuiltinScenario& builtin_scenario(const std::string& name) {
    for (const BuiltinScenario& s : table())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown built-in scenario '" + name +
                                "' (expected fig1|fig2|fig3|fig4)");
}

}  // namespace shockorder
