#pragma once

#include <string>

namespace shockorder {

enum class GeneratorFamily {
    Clayton,        // phi(x) = (1 + theta x)^(-1/theta),            theta > 0
    Gumbel,         // phi(x) = exp(-x^(1/theta)),                   theta >= 1
    Amh,            // phi(x) = (1 - theta) / (e^x - theta),         theta in [0, 1)
    GumbelBarnett,  // phi(x) = exp((1 - e^x) / theta),              theta in (0, 1]
    GumbelHougaard, // phi(x) = exp(1 - (1 + x)^theta),              theta >= 1
};

const char* family_name(GeneratorFamily family);

// One-parameter Archimedean generator phi: [0,inf) -> [0,1], phi(0)=1,
// phi(x)->0, non-increasing, with pseudo-inverse psi = phi^{-1}.
//
// Evaluations that would overflow in the naive closed forms are rearranged in
// log space: log_phi() is exact for all x (including far past the point where
// phi underflows to 0), and psi_from_log() evaluates psi from log(u) so that
// compositions of the form psi2(phi1(x)) never round through a subnormal.
class ArchimedeanGenerator {
  public:
    // Throws std::domain_error if theta is outside the family's validity window.
    ArchimedeanGenerator(GeneratorFamily family, double theta);

    GeneratorFamily family() const { return family_; }
    double theta() const { return theta_; }

    double phi(double x) const;      // x >= 0
    double log_phi(double x) const;  // exact log of phi, defined for all x >= 0
    double psi(double u) const;      // u in (0,1]; psi(1) = 0; u = 0 is rejected
    double psi_from_log(double log_u) const;  // log_u <= 0

    // Analytic first derivatives, both <= 0 on their domains.
    // phi_prime is unbounded at x = 0 for Gumbel with theta > 1 (rejected).
    double phi_prime(double x) const;
    double psi_prime(double u) const;  // u in (0,1]

    bool operator==(const ArchimedeanGenerator&) const = default;

  private:
    GeneratorFamily family_;
    double theta_;
};

// psi2(phi1(x)) evaluated in log space; composite(g, g, x) == x up to round-off.
double composite(const ArchimedeanGenerator& gen1, const ArchimedeanGenerator& gen2, double x);

// Smallest u accepted when system evaluations clamp psi arguments (see
// system_distribution); psi itself accepts any positive double.
inline constexpr double kPsiClampFloor = 1e-300;

}  // namespace shockorder
