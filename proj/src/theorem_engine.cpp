#include "shockorder/theorem_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shockorder {

namespace {

CheckReport relation_report(const Scenario& scn, Relation relation) {
    double raw = 0.0;
    std::string name;
    bool holds = false;
    switch (relation) {
        case Relation::AlphaWeakSupBeta:
            raw = weak_supermajorization_violation(scn.beta, scn.alpha);
            holds = weak_supermajorizes(scn.beta, scn.alpha);
            name = "alpha <=^w beta";
            break;
        case Relation::BetaMajAlpha:
            raw = majorization_violation(scn.alpha, scn.beta);
            holds = majorizes(scn.alpha, scn.beta);
            name = "beta <=_m alpha";
            break;
        case Relation::AlphaMajBeta:
            raw = majorization_violation(scn.beta, scn.alpha);
            holds = majorizes(scn.beta, scn.alpha);
            name = "alpha <=_m beta";
            break;
        case Relation::BetaWeakSupAlpha:
            raw = weak_supermajorization_violation(scn.alpha, scn.beta);
            holds = weak_supermajorizes(scn.alpha, scn.beta);
            name = "beta <=^w alpha";
            break;
    }
    // the bool carries the partial-sum tolerance; report raw slack alongside
    return {std::move(name), holds, holds ? std::min(raw, 0.0) : raw, "partial sums"};
}

CheckReport cone_report(const char* label, const ParamVector& v, Cone required) {
    bool holds = in_cone(v, required);
    double viol = cone_violation(v, required);
    return {std::string(label) + " in " + cone_name(required), holds,
            holds ? std::min(viol, 0.0) : viol, "adjacent entries"};
}

CheckReport transform_disjunction(const Scenario& scn, const TheoremSpec& spec,
                                  const CheckOptions& opts) {
    auto grid = interior_unit_grid(opts.transform_points);
    CheckReport rx = check_t_psi_transform(scn.gen_x, spec.transform, spec.direction, grid,
                                           opts.fd_eps);
    CheckReport ry = check_t_psi_transform(scn.gen_y, spec.transform, spec.direction, grid,
                                           opts.fd_eps);
    CheckReport out;
    out.name = rx.name + " (psi_x or psi_y)";
    out.holds = rx.holds || ry.holds;
    out.worst_violation = std::min(rx.worst_violation, ry.worst_violation);
    if (out.holds)
        out.witness = rx.holds && ry.holds ? "both generators" : (rx.holds ? "psi_x" : "psi_y");
    else
        out.witness = "neither generator; x: " + rx.witness + ", y: " + ry.witness;
    return out;
}

}  // namespace

Scenario::Scenario(ArchimedeanGenerator gx, ArchimedeanGenerator gy, SurvivalFamily fam,
                   ParamVector a, ParamVector b, ParamVector p, Structure s)
    : gen_x(gx),
      gen_y(gy),
      family(fam),
      alpha(std::move(a)),
      beta(std::move(b)),
      shocks(std::move(p)),
      structure(s) {
    if (alpha.size() != beta.size() || alpha.size() != shocks.size())
        throw std::invalid_argument("alpha, beta and shocks must have equal length");
    for (std::size_t i = 0; i < shocks.size(); ++i)
        if (shocks[i] > 1.0)
            throw std::domain_error("shocks[" + std::to_string(i) + "] outside (0,1]");
}

SystemSpec Scenario::system_x() const { return {gen_x, family, alpha, shocks, structure}; }
SystemSpec Scenario::system_y() const { return {gen_y, family, beta, shocks, structure}; }

std::vector<double> default_order_grid(const Scenario& scn, std::size_t points) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const ParamVector* v : {&scn.alpha, &scn.beta}) {
        for (double theta : v->values()) {
            lo = std::min(lo, scn.family.quantile(0.001, theta));
            hi = std::max(hi, scn.family.quantile(0.999, theta));
        }
    }
    if (!(hi > lo)) hi = lo * 2.0;  // degenerate single-point bracket
    return log_grid(lo, hi, points);
}

HypothesisReport validate(const Scenario& scn, TheoremId id, const CheckOptions& opts) {
    const TheoremSpec& spec = theorem_spec(id);
    if (spec.structure != scn.structure)
        throw std::invalid_argument(std::string(theorem_name(id)) +
                                    ": scenario structure mismatch");

    HypothesisReport report;
    report.theorem = id;
    auto& checks = report.condition_results;

    checks.push_back(relation_report(scn, spec.relation));
    checks.push_back(cone_report("alpha", scn.alpha, spec.alpha_cone));
    checks.push_back(cone_report("beta", scn.beta, spec.beta_cone));
    checks.push_back(cone_report("shocks", scn.shocks, spec.shock_cone));

    auto add_grid = log_grid(opts.additivity_lo, opts.additivity_hi, opts.additivity_points);
    checks.push_back(
        check_additivity(scn.gen_x, scn.gen_y, add_grid, spec.additivity, opts.additivity_eps));

    checks.push_back(transform_disjunction(scn, spec, opts));

    auto order_grid = default_order_grid(scn, 64);
    auto x_grid = log_grid(order_grid.front(), order_grid.back(), opts.curvature_x_points);
    double tmin = std::numeric_limits<double>::infinity(), tmax = 0.0;
    for (const ParamVector* v : {&scn.alpha, &scn.beta}) {
        for (double theta : v->values()) {
            tmin = std::min(tmin, theta);
            tmax = std::max(tmax, theta);
        }
    }
    auto theta_grid = linear_grid(0.8 * tmin, 1.2 * tmax, opts.curvature_theta_points);
    checks.push_back(
        check_sf_curvature(scn.family, x_grid, theta_grid, spec.curvature, opts.fd_eps));

    report.all_hold = std::all_of(checks.begin(), checks.end(),
                                  [](const CheckReport& c) { return c.holds; });
    if (report.all_hold) report.conclusion = spec.conclusion;
    return report;
}

std::vector<HypothesisReport> conclude(const Scenario& scn, const CheckOptions& opts) {
    std::vector<HypothesisReport> out;
    for (TheoremId id : theorems_for(scn.structure)) out.push_back(validate(scn, id, opts));
    return out;
}

OrderCheck verify_order_numeric(const Scenario& scn, std::span<const double> x_grid, double tol,
                                const OrderingConclusion& predicted) {
    if (!(tol >= 0.0)) throw std::domain_error("tolerance must be >= 0");
    bool parallel = scn.structure == Structure::Parallel;
    if (parallel != (predicted.statistic == Statistic::Max))
        throw std::invalid_argument("conclusion statistic does not match the scenario structure");
    SystemSpec sx = scn.system_x();
    SystemSpec sy = scn.system_y();

    // Parallel compares CDFs of the maxima, series compares survival
    // functions of the minima. diff = (Y value) - (X value); the predicted
    // smaller system fixes which sign of diff counts as a violation.
    double needed_sign;
    if (scn.structure == Structure::Parallel)
        needed_sign = predicted.smaller == SystemLabel::Y ? +1.0 : -1.0;
    else
        needed_sign = predicted.smaller == SystemLabel::X ? +1.0 : -1.0;

    OrderCheck out;
    out.max_signed_violation = -std::numeric_limits<double>::infinity();
    for (double x : x_grid) {
        double diff = scn.structure == Structure::Parallel
                          ? parallel_cdf(sy, x) - parallel_cdf(sx, x)
                          : series_sf(sy, x) - series_sf(sx, x);
        double violation = -needed_sign * diff;
        if (violation > out.max_signed_violation) {
            out.max_signed_violation = violation;
            out.argmax_x = x;
        }
    }
    out.holds = out.max_signed_violation <= tol;
    return out;
}

}  // namespace shockorder
