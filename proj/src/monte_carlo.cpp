#include "shockorder/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace shockorder {

namespace {

// largest double below 1; copula draws are clamped into [1e-300, this] so the
// inverse lifetime transforms stay finite
constexpr double kOneMinus = 0x1.fffffffffffffp-1;

// Chambers-Mallows-Stuck draw of a positive alpha-stable variable with
// Laplace transform exp(-s^alpha), alpha in (0,1).
double positive_stable(double alpha, Rng& rng) {
    double theta = std::numbers::pi * rng.uniform();
    double w = rng.exponential();
    double a = std::sin(alpha * theta) / std::pow(std::sin(theta), 1.0 / alpha);
    double b = std::pow(std::sin((1.0 - alpha) * theta) / w, (1.0 - alpha) / alpha);
    return a * b;
}

}  // namespace

bool frailty_supported(GeneratorFamily family) {
    switch (family) {
        case GeneratorFamily::Clayton:
        case GeneratorFamily::Gumbel:
        case GeneratorFamily::Amh:
            return true;
        case GeneratorFamily::GumbelBarnett:
        case GeneratorFamily::GumbelHougaard:
            return false;
    }
    return false;
}

FrailtySampler::FrailtySampler(ArchimedeanGenerator gen, SeededStream stream)
    : gen_(gen), rng_(stream) {
    if (!frailty_supported(gen.family())) throw UnsupportedFamilyError(gen.family());
}

double FrailtySampler::draw_frailty() {
    switch (gen_.family()) {
        case GeneratorFamily::Clayton:
            // Gamma(shape 1/theta, scale theta): LT (1 + theta s)^(-1/theta)
            return gen_.theta() * rng_.gamma(1.0 / gen_.theta());
        case GeneratorFamily::Gumbel:
            if (gen_.theta() == 1.0) return 1.0;  // independence, degenerate frailty
            return positive_stable(1.0 / gen_.theta(), rng_);
        case GeneratorFamily::Amh: {
            double theta = gen_.theta();
            if (theta == 0.0) return 1.0;
            // geometric on {1,2,...} with success probability 1 - theta
            return std::ceil(std::log(rng_.uniform()) / std::log(theta));
        }
        default:
            throw UnsupportedFamilyError(gen_.family());
    }
}

void FrailtySampler::draw_copula(std::span<double> u) {
    double v = draw_frailty();
    for (double& ui : u) {
        ui = std::exp(gen_.log_phi(rng_.exponential() / v));
        ui = std::clamp(ui, 1e-300, kOneMinus);
    }
}

std::vector<double> sample_copula(const ArchimedeanGenerator& gen, std::size_t n,
                                  SeededStream stream) {
    FrailtySampler sampler(gen, stream);
    std::vector<double> u(n);
    sampler.draw_copula(u);
    return u;
}

SystemSampler::SystemSampler(SystemSpec spec, SeededStream stream)
    : spec_(std::move(spec)), frailty_(spec_.generator, stream), u_(spec_.size()) {}

double SystemSampler::draw() {
    frailty_.draw_copula(u_);
    double best = spec_.structure == Structure::Parallel
                      ? 0.0
                      : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < u_.size(); ++i) {
        double p = spec_.shocks[i];
        double life;
        if (spec_.structure == Structure::Parallel) {
            // copula acts on CDFs: shocked marginal 1 - p*sf has mass 1-p at 0
            life = u_[i] > 1.0 - p
                       ? spec_.family.sf_inverse(std::max((1.0 - u_[i]) / p, 1e-300),
                                                 spec_.params[i])
                       : 0.0;
            best = std::max(best, life);
        } else {
            // survival copula on p*sf: survives the shock iff u < p
            life = u_[i] < p ? spec_.family.sf_inverse(std::min(u_[i] / p, 1.0), spec_.params[i])
                             : 0.0;
            best = std::min(best, life);
        }
    }
    return best;
}

std::vector<double> SystemSampler::draw(std::size_t count) {
    std::vector<double> out(count);
    for (double& x : out) x = draw();
    return out;
}

double sample_system_lifetime(const SystemSpec& spec, SeededStream stream) {
    return SystemSampler(spec, stream).draw();
}

std::vector<double> empirical_cdf(std::vector<double> samples, std::span<const double> x_grid) {
    if (samples.empty()) throw std::invalid_argument("empirical_cdf: empty sample set");
    std::sort(samples.begin(), samples.end());
    std::vector<double> out(x_grid.size());
    double n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        auto it = std::upper_bound(samples.begin(), samples.end(), x_grid[i]);
        out[i] = static_cast<double>(it - samples.begin()) / n;
    }
    return out;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample set");
    std::sort(samples.begin(), samples.end());
    double n = static_cast<double>(samples.size());
    double d = 0.0;
    std::size_t i = 0;
    while (i < samples.size()) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;  // tie block
        double v = samples[i];
        double hi = static_cast<double>(j) / n;
        double lo = static_cast<double>(i) / n;
        double f = cdf(v);
        double f_left = v <= 0.0 ? 0.0 : f;  // only atom is at 0
        d = std::max({d, std::abs(hi - f), std::abs(lo - f_left)});
        i = j;
    }
    return d;
}

}  // namespace shockorder
