#pragma once

#include <iosfwd>
#include <string>

#include "shockorder/scenario_io.hpp"

namespace shockorder {

// Exit-code contract shared by every command:
//   0 success, 1 input error, 2 negative outcome (no theorem holds / MC bound
//   exceeded), 3 Monte Carlo oracle unavailable for the generator family.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitOracleUnavailable = 3;

struct ReportStyle {
    bool color = false;  // ANSI pass/fail tags; off when NO_COLOR or piped
};

// Validates the scenario against every structure-compatible theorem, writes
// the human-readable condition tables plus a machine-readable JSON line.
int cmd_check(const ScenarioConfig& config, std::ostream& out, const ReportStyle& style = {});

// Emits the x, F_X, F_Y, diff curve as CSV (17 significant digits). Parallel
// scenarios tabulate CDFs of the maxima; series scenarios tabulate survival
// functions of the minima, so diff is the survival difference there.
int cmd_curve(const ScenarioConfig& config, std::ostream& out);

// Monte Carlo cross-check of both systems' analytic laws; overrides for the
// config's sample count and seed may be supplied by the caller.
int cmd_mc(const ScenarioConfig& config, std::ostream& out, const ReportStyle& style = {});

// Writes <name>_config.txt, <name>_curve.csv and <name>_report.txt for a
// built-in scenario into out_dir.
int cmd_repro(const std::string& figure, const std::string& out_dir, std::ostream& log,
              const ReportStyle& style = {});

}  // namespace shockorder
