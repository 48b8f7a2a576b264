#pragma once

#include "shockorder/generators.hpp"
#include "shockorder/lifetime_models.hpp"
#include "shockorder/majorization.hpp"

namespace shockorder {

enum class Structure { Series, Parallel };

const char* structure_name(Structure s);

// One shocked system: n dependent components with lifetimes from `family`
// (parameters `params`), each surviving an instantaneous shock with
// probability shocks[i] (a failed shock kills the component at time 0). The
// joint law of the shocked vector is Archimedean with `generator`: the copula
// acts on the shocked CDFs for parallel systems and as a survival copula on
// the shocked survival functions for series systems (two different joint
// models, matching the closed forms below).
struct SystemSpec {
    ArchimedeanGenerator generator;
    SurvivalFamily family;
    ParamVector params;
    ParamVector shocks;  // entries in (0,1]
    Structure structure;

    SystemSpec(ArchimedeanGenerator gen, SurvivalFamily fam, ParamVector params_in,
               ParamVector shocks_in, Structure structure_in);

    std::size_t size() const { return params.size(); }
};

// p * sf(x; theta), the survival function of a shocked component.
double shocked_sf(const SurvivalFamily& family, double x, double theta, double p);

// CDF of the system lifetime max(X_1 I_1, ..., X_n I_n):
//   F(x) = phi( sum_j psi(1 - p_j sf(x; theta_j)) ).
// Arguments of psi are clamped to [kPsiClampFloor, 1]; with any p_j = 1 the
// x = 0 evaluation goes through the clamp and returns the limit value 0.
double parallel_cdf(const SystemSpec& spec, double x);

// Survival function of min(X_1 I_1, ..., X_n I_n):
//   sf(x) = phi( sum_j psi(p_j sf(x; theta_j)) ).
// The lifetime law has an atom at 0 of mass 1 - sf(0) (shock-killed systems);
// values returned are the right limits.
double series_sf(const SystemSpec& spec, double x);

}  // namespace shockorder
