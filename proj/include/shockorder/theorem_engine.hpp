#pragma once

#include <optional>
#include <span>
#include <vector>

#include "shockorder/condition_checks.hpp"
#include "shockorder/system_distribution.hpp"

namespace shockorder {

// Two systems sharing the lifetime family, shock vector, and structure:
// X carries (gen_x, alpha), Y carries (gen_y, beta).
struct Scenario {
    ArchimedeanGenerator gen_x;
    ArchimedeanGenerator gen_y;
    SurvivalFamily family;
    ParamVector alpha;
    ParamVector beta;
    ParamVector shocks;
    Structure structure;

    Scenario(ArchimedeanGenerator gx, ArchimedeanGenerator gy, SurvivalFamily fam,
             ParamVector a, ParamVector b, ParamVector p, Structure s);

    SystemSpec system_x() const;
    SystemSpec system_y() const;
};

enum class TheoremId { T3_1, T3_2, T3_3, T3_4, T4_1, T4_2, T4_3, T4_4 };

const char* theorem_name(TheoremId id);

enum class SystemLabel { X, Y };
enum class Statistic { Min, Max };

// "smaller" system precedes the other in the usual stochastic order for the
// named order statistic.
struct OrderingConclusion {
    SystemLabel smaller;
    Statistic statistic;
    bool operator==(const OrderingConclusion&) const = default;
};

std::string conclusion_text(const OrderingConclusion& c);

// Which majorization-type relation condition (i) requires between alpha and beta.
enum class Relation {
    AlphaWeakSupBeta,  // alpha <=^w beta
    BetaMajAlpha,      // beta  <=_m alpha
    AlphaMajBeta,      // alpha <=_m beta
    BetaWeakSupAlpha,  // beta  <=^w alpha
};

// Declarative statement of one ordering result; the eight rows live in one
// table (theorem_table.cpp) so they can be audited side by side.
//
// Transform directions are stated for the signed maps t -> t*psi'(.) (psi' is
// non-positive). t*psi'(1-t) is decreasing for every convex generator, so the
// four parallel rows share that requirement; the series rows genuinely split
// the generator families by the direction of t*psi'(t).
struct TheoremSpec {
    TheoremId id;
    Structure structure;
    Relation relation;
    Cone alpha_cone;
    Cone beta_cone;
    Cone shock_cone;
    AdditivityMode additivity;
    TransformKind transform;
    Direction direction;
    CurvatureTag curvature;
    OrderingConclusion conclusion;
};

const TheoremSpec& theorem_spec(TheoremId id);
std::span<const TheoremId> theorems_for(Structure structure);
std::span<const TheoremId> all_theorems();

struct HypothesisReport {
    TheoremId theorem;
    std::vector<CheckReport> condition_results;
    bool all_hold = false;
    std::optional<OrderingConclusion> conclusion;  // present exactly when all_hold
};

// Grids and tolerances for the numeric condition checks.
struct CheckOptions {
    double additivity_lo = 1e-4;
    double additivity_hi = 30.0;
    std::size_t additivity_points = 64;
    double additivity_eps = kAdditivityEps;
    std::size_t transform_points = 256;
    std::size_t curvature_x_points = 8;
    std::size_t curvature_theta_points = 12;
    double fd_eps = kFiniteDiffEps;
};

// Runs the theorem's exact condition set against the scenario. The transform
// condition is a disjunction over the two generators. Throws on structure
// mismatch.
HypothesisReport validate(const Scenario& scenario, TheoremId id, const CheckOptions& opts = {});

// Reports for every structure-compatible theorem, in id order.
std::vector<HypothesisReport> conclude(const Scenario& scenario, const CheckOptions& opts = {});

// 512 log-spaced points bracketing the 0.1% and 99.9% component quantiles
// across both parameter vectors.
std::vector<double> default_order_grid(const Scenario& scenario, std::size_t points = 512);

struct OrderCheck {
    bool holds = false;
    double max_signed_violation = 0.0;  // positive means the predicted sign is broken
    double argmax_x = 0.0;
};

// Direct grid check of the predicted dominance: parallel scenarios compare
// CDFs of the maxima, series scenarios compare survival functions of the
// minima. Evidence, not proof; reports the worst signed violation.
OrderCheck verify_order_numeric(const Scenario& scenario, std::span<const double> x_grid,
                                double tol, const OrderingConclusion& predicted);

}  // namespace shockorder
