#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shockorder/generators.hpp"
#include "shockorder/lifetime_models.hpp"
#include "shockorder/majorization.hpp"
#include "shockorder/system_distribution.hpp"

namespace shockorder {

// Outcome of one numeric hypothesis check. Violations are tolerance-adjusted
// signed slack: worst_violation <= 0 exactly when the check holds; a negative
// value is the margin left after subtracting the check's epsilon.
struct CheckReport {
    std::string name;
    bool holds = false;
    double worst_violation = 0.0;
    std::string witness;  // grid point / pair where the worst slack occurred
};

enum class AdditivityMode { Super, Sub };
enum class TransformKind { TPsiPrimeOneMinusT, TPsiPrimeT };
enum class Direction { Increasing, Decreasing };
enum class SchurTarget { SchurConvex, SchurConcave };

inline constexpr double kAdditivityEps = 1e-9;
inline constexpr double kFiniteDiffEps = 1e-7;  // second differences amplify round-off

// Log-spaced grid helpers shared by the checkers and the theorem engine.
std::vector<double> log_grid(double lo, double hi, std::size_t points);
std::vector<double> linear_grid(double lo, double hi, std::size_t points);
std::vector<double> interior_unit_grid(std::size_t points);  // k/(n+1), inside (0,1)
std::vector<double> default_additivity_grid();               // 64 log points in [1e-4, 30]

// Super: psi2(phi1(x+y)) >= psi2(phi1(x)) + psi2(phi1(y)) - eps over all grid
// pairs (x,y); Sub is the reverse inequality.
CheckReport check_additivity(const ArchimedeanGenerator& gen1, const ArchimedeanGenerator& gen2,
                             std::span<const double> grid, AdditivityMode mode,
                             double eps = kAdditivityEps);

// The sufficient route: convex (concave) second differences plus a zero value
// at the origin imply super- (sub-) additivity.
struct ConvexityRoute {
    CheckReport convex;
    CheckReport concave;
    bool zero_at_origin = false;
};
ConvexityRoute check_convexity_route(const ArchimedeanGenerator& gen1,
                                     const ArchimedeanGenerator& gen2,
                                     std::span<const double> grid, double eps = kFiniteDiffEps);

// Monotonicity of the signed transform g(t) = t*psi'(1-t) or t*psi'(t) on a
// grid inside (0,1), by adjacent differences. psi' <= 0 everywhere, so g is
// the signed (non-positive) map; directions refer to this signed value.
CheckReport check_t_psi_transform(const ArchimedeanGenerator& gen, TransformKind transform,
                                  Direction direction, std::span<const double> t_grid,
                                  double eps = kFiniteDiffEps);

// Numeric monotonicity of theta -> sf and sign of the second finite
// difference of theta -> log sf, against the expected tag.
CheckReport check_sf_curvature(const SurvivalFamily& family, std::span<const double> x_grid,
                               std::span<const double> theta_grid, CurvatureTag expect,
                               double eps = kFiniteDiffEps);

// Ingredients of the per-theorem aggregate L(beta) whose Schur behaviour the
// proofs rely on: parallel L = phi(sum psi(1 - p_j sf(x; b_j))), series
// L = phi(sum psi(p_j sf(x; b_j))).
struct SchurProbe {
    ArchimedeanGenerator generator;
    SurvivalFamily family;
    ParamVector shocks;
    Structure structure;
};

// Evaluates (b_i - b_j) * (dL/db_i - dL/db_j) by central finite differences
// for all pairs on each sampled beta vector; SchurConvex requires the sign
// >= -eps, SchurConcave <= +eps. A falsification tool, not a proof.
CheckReport check_schur_condition(const SchurProbe& probe, SchurTarget target,
                                  std::span<const ParamVector> beta_samples, double x_probe,
                                  double eps = kFiniteDiffEps);

// Sorted uniform draws in [lo, hi], arranged into the requested cone.
std::vector<ParamVector> sample_cone_vectors(Cone required, std::size_t length,
                                             std::size_t count, double lo, double hi,
                                             std::uint64_t seed);

}  // namespace shockorder
