#include "shockorder/system_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shockorder {

namespace {

double clamped_psi(const ArchimedeanGenerator& gen, double u) {
    return gen.psi(std::min(1.0, std::max(u, kPsiClampFloor)));
}

void require_structure(const SystemSpec& spec, Structure expected, const char* op) {
    if (spec.structure != expected)
        throw std::invalid_argument(std::string(op) + ": system structure mismatch");
}

}  // namespace

const char* structure_name(Structure s) {
    return s == Structure::Series ? "series" : "parallel";
}

SystemSpec::SystemSpec(ArchimedeanGenerator gen, SurvivalFamily fam, ParamVector params_in,
                       ParamVector shocks_in, Structure structure_in)
    : generator(gen),
      family(fam),
      params(std::move(params_in)),
      shocks(std::move(shocks_in)),
      structure(structure_in) {
    if (params.size() != shocks.size())
        throw std::invalid_argument("params and shocks must have equal length");
    for (std::size_t i = 0; i < shocks.size(); ++i)
        if (shocks[i] > 1.0)
            throw std::domain_error("shocks[" + std::to_string(i) + "] outside (0,1]");
}

double shocked_sf(const SurvivalFamily& family, double x, double theta, double p) {
    if (!(p > 0.0) || p > 1.0)
        throw std::domain_error("shock survival probability p must lie in (0,1]");
    return p * family.sf(x, theta);
}

double parallel_cdf(const SystemSpec& spec, double x) {
    require_structure(spec, Structure::Parallel, "parallel_cdf");
    double sum = 0.0;
    for (std::size_t j = 0; j < spec.size(); ++j)
        sum += clamped_psi(spec.generator, 1.0 - spec.shocks[j] * spec.family.sf(x, spec.params[j]));
    return spec.generator.phi(sum);
}

double series_sf(const SystemSpec& spec, double x) {
    require_structure(spec, Structure::Series, "series_sf");
    double sum = 0.0;
    for (std::size_t j = 0; j < spec.size(); ++j)
        sum += clamped_psi(spec.generator, spec.shocks[j] * spec.family.sf(x, spec.params[j]));
    return spec.generator.phi(sum);
}

}  // namespace shockorder
