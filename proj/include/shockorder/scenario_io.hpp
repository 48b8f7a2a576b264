#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <optional>
#include <string>

#include "shockorder/theorem_engine.hpp"

namespace shockorder {

enum class GridSpacing { Linear, Log };

// Evaluation grid request; absent bounds fall back to the component-quantile
// bracketing rule (default_order_grid).
struct GridSpec {
    std::optional<double> x_min;
    std::optional<double> x_max;
    std::size_t points = 512;
    GridSpacing spacing = GridSpacing::Log;
};

struct ScenarioConfig {
    Scenario scenario;
    GridSpec grid;
    double order_tol = 1e-8;
    std::size_t mc_samples = 100000;
    std::uint64_t mc_seed = 42;
};

// Parse/validation failure; message carries the offending key and line.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& msg, int line_number, std::string key_name)
        : std::runtime_error(msg), line(line_number), key(std::move(key_name)) {}
    int line;
    std::string key;
};

// Flat key=value text document with dotted section prefixes, '#' comments and
// blank lines. Parsing is strict: unknown keys, duplicates, missing required
// keys and out-of-domain values are all rejected with the key and line named.
ScenarioConfig parse_config(std::istream& in, const std::string& source_name = "<config>");
ScenarioConfig load_config(const std::string& path);

// Inverse of parse_config for every key (17 significant digits), so an
// emitted document re-reads to an identical scenario.
void write_config(std::ostream& out, const ScenarioConfig& config);

std::vector<double> evaluation_grid(const ScenarioConfig& config);

// Enum spellings shared by the parser, writer and reports.
std::string generator_token(GeneratorFamily family);
std::string lifetime_token(LifetimeKind kind);
std::string structure_token(Structure structure);
GeneratorFamily parse_generator_token(const std::string& token);
LifetimeKind parse_lifetime_token(const std::string& token);
Structure parse_structure_token(const std::string& token);

}  // namespace shockorder
