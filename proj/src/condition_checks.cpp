#include "shockorder/condition_checks.hpp"

#include "shockorder/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace shockorder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

struct Worst {
    double violation = -kInf;
    std::string witness;

    void offer(double v, const std::string& w) {
        if (std::isnan(v)) {  // non-finite evaluation: report as a failure
            violation = kInf;
            witness = w + " (non-finite evaluation)";
        } else if (v > violation) {
            violation = v;
            witness = w;
        }
    }

    CheckReport report(std::string name, double eps) const {
        double adjusted = violation - eps;
        return {std::move(name), adjusted <= 0.0, adjusted, witness};
    }
};

double fd_step(double v) { return 1e-5 * std::max(1.0, std::abs(v)); }

// second differences divide by h^2, so they need a coarser step than the
// first-difference probes to keep round-off below the sign tolerance
double fd_step2(double v) { return 1e-2 * std::max(1.0, std::abs(v)); }

}  // namespace

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw std::invalid_argument("log_grid requires 0 < lo < hi and >= 2 points");
    std::vector<double> g(points);
    double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (points - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    if (!(hi > lo) || points < 2)
        throw std::invalid_argument("linear_grid requires lo < hi and >= 2 points");
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    g.back() = hi;
    return g;
}

std::vector<double> interior_unit_grid(std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = static_cast<double>(i + 1) / static_cast<double>(points + 1);
    return g;
}

std::vector<double> default_additivity_grid() { return log_grid(1e-4, 30.0, 64); }

CheckReport check_additivity(const ArchimedeanGenerator& gen1, const ArchimedeanGenerator& gen2,
                             std::span<const double> grid, AdditivityMode mode, double eps) {
    std::vector<double> f(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) f[i] = composite(gen1, gen2, grid[i]);

    Worst worst;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
            double sum = composite(gen1, gen2, grid[i] + grid[j]);
            double parts = f[i] + f[j];
            double slack = mode == AdditivityMode::Super ? parts - sum : sum - parts;
            worst.offer(slack, "(x,y)=(" + fmt(grid[i]) + "," + fmt(grid[j]) + ")");
        }
    }
    const char* name = mode == AdditivityMode::Super ? "psi_2(phi_1(.)) super-additive"
                                                     : "psi_2(phi_1(.)) sub-additive";
    return worst.report(name, eps);
}

ConvexityRoute check_convexity_route(const ArchimedeanGenerator& gen1,
                                     const ArchimedeanGenerator& gen2,
                                     std::span<const double> grid, double eps) {
    Worst convex, concave;
    for (double x : grid) {
        double h = fd_step2(x);
        if (x - h < 0.0) h = x / 2;
        if (h <= 0.0) continue;
        double d2 = (composite(gen1, gen2, x + h) - 2.0 * composite(gen1, gen2, x) +
                     composite(gen1, gen2, x - h)) /
                    (h * h);
        convex.offer(-d2, "x=" + fmt(x));
        concave.offer(d2, "x=" + fmt(x));
    }
    double at0 = composite(gen1, gen2, 0.0);
    ConvexityRoute route{convex.report("composite convex", eps),
                         concave.report("composite concave", eps), std::abs(at0) <= eps};
    if (!route.zero_at_origin) {
        route.convex.holds = false;
        route.concave.holds = false;
    }
    return route;
}

CheckReport check_t_psi_transform(const ArchimedeanGenerator& gen, TransformKind transform,
                                  Direction direction, std::span<const double> t_grid,
                                  double eps) {
    std::vector<double> g(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        double t = t_grid[i];
        if (!(t > 0.0 && t < 1.0))
            throw std::domain_error("transform grid must lie strictly inside (0,1)");
        double u = transform == TransformKind::TPsiPrimeOneMinusT ? 1.0 - t : t;
        g[i] = t * gen.psi_prime(u);
    }
    Worst worst;
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
        double step = g[i + 1] - g[i];
        double slack = direction == Direction::Increasing ? -step : step;
        worst.offer(slack, "t=" + fmt(t_grid[i]));
    }
    std::string name = std::string(transform == TransformKind::TPsiPrimeOneMinusT
                                       ? "t*psi'(1-t) "
                                       : "t*psi'(t) ") +
                       (direction == Direction::Increasing ? "increasing" : "decreasing");
    return worst.report(std::move(name), eps);
}

CheckReport check_sf_curvature(const SurvivalFamily& family, std::span<const double> x_grid,
                               std::span<const double> theta_grid, CurvatureTag expect,
                               double eps) {
    Worst worst;
    for (double x : x_grid) {
        for (std::size_t k = 0; k + 1 < theta_grid.size(); ++k) {
            double step = family.sf(x, theta_grid[k + 1]) - family.sf(x, theta_grid[k]);
            double slack = expect.monotone == ThetaMonotonicity::IncreasingInTheta ? -step : step;
            worst.offer(slack, "monotone at (x,theta)=(" + fmt(x) + "," + fmt(theta_grid[k]) + ")");
        }
        for (double theta : theta_grid) {
            double h = fd_step2(theta);
            if (theta - h <= 0.0) h = theta / 2;
            double d2 = (family.log_sf(x, theta + h) - 2.0 * family.log_sf(x, theta) +
                         family.log_sf(x, theta - h)) /
                        (h * h);
            double slack = expect.log_curvature == ThetaLogCurvature::LogConcaveInTheta ? d2 : -d2;
            worst.offer(slack, "curvature at (x,theta)=(" + fmt(x) + "," + fmt(theta) + ")");
        }
    }
    std::string name =
        std::string("sf ") +
        (expect.monotone == ThetaMonotonicity::IncreasingInTheta ? "increasing" : "decreasing") +
        " and " +
        (expect.log_curvature == ThetaLogCurvature::LogConcaveInTheta ? "log-concave"
                                                                      : "log-convex") +
        " in theta";
    return worst.report(std::move(name), eps);
}

CheckReport check_schur_condition(const SchurProbe& probe, SchurTarget target,
                                  std::span<const ParamVector> beta_samples, double x_probe,
                                  double eps) {
    if (!(x_probe > 0.0)) throw std::domain_error("x_probe must be > 0");

    auto aggregate = [&](const std::vector<double>& b) {
        double sum = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            double s = probe.shocks[j] * probe.family.sf(x_probe, b[j]);
            double u = probe.structure == Structure::Parallel ? 1.0 - s : s;
            sum += probe.generator.psi(std::min(1.0, std::max(u, kPsiClampFloor)));
        }
        return probe.generator.phi(sum);
    };

    Worst worst;
    for (const ParamVector& beta : beta_samples) {
        if (beta.size() != probe.shocks.size())
            throw std::invalid_argument("beta sample length mismatch");
        std::vector<double> b(beta.values().begin(), beta.values().end());
        std::vector<double> grad(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
            double h = fd_step(b[i]);
            if (b[i] - h <= 0.0) h = b[i] / 2;
            std::vector<double> bp = b, bm = b;
            bp[i] += h;
            bm[i] -= h;
            grad[i] = (aggregate(bp) - aggregate(bm)) / (2.0 * h);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                double e = (b[i] - b[j]) * (grad[i] - grad[j]);
                double slack = target == SchurTarget::SchurConvex ? -e : e;
                worst.offer(slack, "beta=(" + fmt(b[i]) + "," + fmt(b[j]) + ") pair (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    return worst.report(target == SchurTarget::SchurConvex ? "aggregate Schur-convex"
                                                           : "aggregate Schur-concave",
                        eps);
}

std::vector<ParamVector> sample_cone_vectors(Cone required, std::size_t length,
                                             std::size_t count, double lo, double hi,
                                             std::uint64_t seed) {
    if (required != Cone::DPlus && required != Cone::IPlus)
        throw std::invalid_argument("cone sampling supports D+ and I+ only");
    Rng rng(SeededStream{seed, 0});
    std::vector<ParamVector> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<double> v(length);
        for (double& x : v) x = rng.uniform(lo, hi);
        std::sort(v.begin(), v.end());
        if (required == Cone::DPlus) std::reverse(v.begin(), v.end());
        out.emplace_back(std::move(v));
    }
    return out;
}

}  // namespace shockorder
