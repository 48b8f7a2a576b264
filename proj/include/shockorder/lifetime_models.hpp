#pragma once

namespace shockorder {

enum class LifetimeKind {
    ExponentialMean,   // sf(x; theta) = exp(-x/theta)                  (theta = mean)
    WeibullScaleRate,  // sf(x; theta) = exp(-theta x^shape)            (rate-like scale)
    LogLogisticScale,  // sf(x; theta) = theta^shape/(theta^shape + x^shape)
};

enum class ThetaMonotonicity { IncreasingInTheta, DecreasingInTheta };
enum class ThetaLogCurvature { LogConcaveInTheta, LogConvexInTheta };

// How the survival function responds to its ordering parameter; only the two
// combinations used by the ordering results are representable.
struct CurvatureTag {
    ThetaMonotonicity monotone;
    ThetaLogCurvature log_curvature;
    bool operator==(const CurvatureTag&) const = default;
};

// One-parameter lifetime law with an optional fixed shape exponent. theta is
// always the ordering parameter; the shape is never varied.
class SurvivalFamily {
  public:
    static SurvivalFamily exponential_mean();
    static SurvivalFamily weibull_scale_rate(double shape);
    static SurvivalFamily log_logistic_scale(double shape);

    LifetimeKind kind() const { return kind_; }
    bool has_shape() const { return kind_ != LifetimeKind::ExponentialMean; }
    double shape() const;  // rejected for ExponentialMean

    double sf(double x, double theta) const;             // x >= 0, theta > 0
    double log_sf(double x, double theta) const;          // exact even where sf underflows
    double dlog_sf_dtheta(double x, double theta) const; // analytic d/dtheta log sf
    double quantile(double p, double theta) const;       // inverse CDF, p in [0,1)
    double sf_inverse(double u, double theta) const;     // inverse survival, u in (0,1]
    CurvatureTag curvature_tag() const;

    bool operator==(const SurvivalFamily&) const = default;

  private:
    SurvivalFamily(LifetimeKind kind, double shape) : kind_(kind), shape_(shape) {}
    LifetimeKind kind_;
    double shape_;
};

const char* kind_name(LifetimeKind kind);

}  // namespace shockorder
