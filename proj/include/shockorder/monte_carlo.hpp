#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "shockorder/rng.hpp"
#include "shockorder/system_distribution.hpp"

namespace shockorder {

// Raised for generator families without a completely monotone frailty
// construction (Gumbel-Barnett, Gumbel-Hougaard).
struct UnsupportedFamilyError : std::runtime_error {
    explicit UnsupportedFamilyError(GeneratorFamily family)
        : std::runtime_error(std::string("no frailty sampler for generator family ") +
                             family_name(family)) {}
};

bool frailty_supported(GeneratorFamily family);

// Marshall-Olkin sampler: V is drawn so its Laplace transform is phi
// (Clayton: Gamma(1/theta, scale theta); Gumbel: positive alpha-stable with
// alpha = 1/theta via Chambers-Mallows-Stuck; AMH: geometric with success
// probability 1-theta), then u_i = phi(E_i / V) with E_i unit exponentials.
class FrailtySampler {
  public:
    FrailtySampler(ArchimedeanGenerator gen, SeededStream stream);

    double draw_frailty();
    void draw_copula(std::span<double> u);  // one joint draw, uniform marginals

  private:
    ArchimedeanGenerator gen_;
    Rng rng_;
};

// One joint copula draw of dimension n (convenience over FrailtySampler).
std::vector<double> sample_copula(const ArchimedeanGenerator& gen, std::size_t n,
                                  SeededStream stream);

// Shocked system lifetime sampler reproducing the closed-form laws in
// system_distribution: one uniform per component drives both the shock
// indicator and, conditional on surviving it, the component lifetime, so the
// shocked marginals carry the system's copula. A masked component has
// lifetime 0; the system lifetime is the max (parallel) or min (series).
class SystemSampler {
  public:
    SystemSampler(SystemSpec spec, SeededStream stream);

    double draw();
    std::vector<double> draw(std::size_t count);

  private:
    SystemSpec spec_;
    FrailtySampler frailty_;
    std::vector<double> u_;
};

double sample_system_lifetime(const SystemSpec& spec, SeededStream stream);

// Right-continuous empirical CDF heights at the grid points. Throws on empty
// samples.
std::vector<double> empirical_cdf(std::vector<double> samples, std::span<const double> x_grid);

// sup_x |F_n(x) - F(x)| for a law that is continuous except for a possible
// atom at 0 (the shocked-system case). Ties in the sample are grouped.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

// DKW-motivated acceptance bound used by the MC cross-checks.
inline double ks_bound(std::size_t n_samples) {
    return 1.36 / std::sqrt(static_cast<double>(n_samples)) + 0.005;
}

}  // namespace shockorder
