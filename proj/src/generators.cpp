#include "shockorder/generators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace shockorder {

namespace {

// e^x overflows past ~709.78; beyond this the Gumbel-Barnett exponent is -inf.
constexpr double kExpOverflow = 710.0;

[[noreturn]] void bad_theta(GeneratorFamily family, double theta) {
    throw std::domain_error(std::string(family_name(family)) + ": parameter theta=" +
                            std::to_string(theta) + " outside the validity window");
}

void require_nonneg_x(double x) {
    if (!(x >= 0.0)) throw std::domain_error("generator argument x must be >= 0");
}

void require_unit_u(double u) {
    if (!(u > 0.0) || u > 1.0) throw std::domain_error("psi argument u must lie in (0,1]");
}

}  // namespace

const char* family_name(GeneratorFamily family) {
    switch (family) {
        case GeneratorFamily::Clayton: return "clayton";
        case GeneratorFamily::Gumbel: return "gumbel";
        case GeneratorFamily::Amh: return "amh";
        case GeneratorFamily::GumbelBarnett: return "gumbel_barnett";
        case GeneratorFamily::GumbelHougaard: return "gumbel_hougaard";
    }
    return "?";
}

ArchimedeanGenerator::ArchimedeanGenerator(GeneratorFamily family, double theta)
    : family_(family), theta_(theta) {
    if (std::isnan(theta)) bad_theta(family, theta);
    switch (family) {
        case GeneratorFamily::Clayton:
            if (!(theta > 0.0)) bad_theta(family, theta);
            break;
        case GeneratorFamily::Gumbel:
        case GeneratorFamily::GumbelHougaard:
            if (!(theta >= 1.0)) bad_theta(family, theta);
            break;
        case GeneratorFamily::Amh:
            if (!(theta >= 0.0 && theta < 1.0)) bad_theta(family, theta);
            break;
        case GeneratorFamily::GumbelBarnett:
            if (!(theta > 0.0 && theta <= 1.0)) bad_theta(family, theta);
            break;
    }
}

double ArchimedeanGenerator::log_phi(double x) const {
    require_nonneg_x(x);
    switch (family_) {
        case GeneratorFamily::Clayton:
            return -std::log1p(theta_ * x) / theta_;
        case GeneratorFamily::Gumbel:
            return -std::pow(x, 1.0 / theta_);
        case GeneratorFamily::Amh:
            if (theta_ == 0.0) return -x;  // independence generator e^{-x}
            // log((1-t)/(e^x - t)) = log(1-t) - x - log(1 - t e^{-x})
            return std::log1p(-theta_) - x - std::log1p(-theta_ * std::exp(-x));
        case GeneratorFamily::GumbelBarnett:
            if (x >= kExpOverflow) return -std::numeric_limits<double>::infinity();
            return -std::expm1(x) / theta_;
        case GeneratorFamily::GumbelHougaard:
            return 1.0 - std::pow(1.0 + x, theta_);
    }
    return 0.0;
}

double ArchimedeanGenerator::phi(double x) const { return std::exp(log_phi(x)); }

double ArchimedeanGenerator::psi_from_log(double log_u) const {
    if (log_u > 0.0 || std::isnan(log_u))
        throw std::domain_error("psi_from_log argument must be <= 0");
    switch (family_) {
        case GeneratorFamily::Clayton:
            return std::expm1(-theta_ * log_u) / theta_;
        case GeneratorFamily::Gumbel:
            return std::pow(-log_u, theta_);
        case GeneratorFamily::Amh:
            if (theta_ == 0.0) return -log_u;
            // log((1 - t + t u)/u) = log1p(t (u-1)) - log u
            return std::log1p(theta_ * std::expm1(log_u)) - log_u;
        case GeneratorFamily::GumbelBarnett:
            return std::log1p(-theta_ * log_u);
        case GeneratorFamily::GumbelHougaard:
            return std::expm1(std::log1p(-log_u) / theta_);
    }
    return 0.0;
}

double ArchimedeanGenerator::psi(double u) const {
    require_unit_u(u);
    return psi_from_log(std::log(u));
}

double ArchimedeanGenerator::phi_prime(double x) const {
    require_nonneg_x(x);
    switch (family_) {
        case GeneratorFamily::Clayton:
            return -std::exp(-(1.0 / theta_ + 1.0) * std::log1p(theta_ * x));
        case GeneratorFamily::Gumbel: {
            if (x == 0.0) {
                if (theta_ == 1.0) return -1.0;
                throw std::domain_error("gumbel: phi' is unbounded at x=0 for theta > 1");
            }
            double r = std::pow(x, 1.0 / theta_);
            return -(r / (theta_ * x)) * std::exp(-r);
        }
        case GeneratorFamily::Amh: {
            double em = std::exp(-x);
            if (theta_ == 0.0) return -em;
            double d = 1.0 - theta_ * em;
            return -(1.0 - theta_) * em / (d * d);
        }
        case GeneratorFamily::GumbelBarnett: {
            if (x >= kExpOverflow) return -0.0;
            return -std::exp(x - std::expm1(x) / theta_) / theta_;
        }
        case GeneratorFamily::GumbelHougaard: {
            double lp = 1.0 - std::pow(1.0 + x, theta_);
            return -theta_ * std::pow(1.0 + x, theta_ - 1.0) * std::exp(lp);
        }
    }
    return 0.0;
}

double ArchimedeanGenerator::psi_prime(double u) const {
    require_unit_u(u);
    switch (family_) {
        case GeneratorFamily::Clayton:
            return -std::pow(u, -theta_ - 1.0);
        case GeneratorFamily::Gumbel:
            // pow(0,0) == 1 covers theta == 1 at u == 1 (psi' == -1 there).
            return -theta_ * std::pow(-std::log(u), theta_ - 1.0) / u;
        case GeneratorFamily::Amh:
            if (theta_ == 0.0) return -1.0 / u;
            return theta_ / (1.0 - theta_ + theta_ * u) - 1.0 / u;
        case GeneratorFamily::GumbelBarnett:
            return -theta_ / (u * (1.0 - theta_ * std::log(u)));
        case GeneratorFamily::GumbelHougaard:
            return -std::pow(1.0 - std::log(u), 1.0 / theta_ - 1.0) / (theta_ * u);
    }
    return 0.0;
}

double composite(const ArchimedeanGenerator& gen1, const ArchimedeanGenerator& gen2, double x) {
    return gen2.psi_from_log(gen1.log_phi(x));
}

}  // namespace shockorder
