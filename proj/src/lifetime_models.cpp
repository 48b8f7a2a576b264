#include "shockorder/lifetime_models.hpp"

#include <cmath>
#include <stdexcept>

namespace shockorder {

namespace {

void check_args(double x, double theta) {
    if (!(x >= 0.0)) throw std::domain_error("lifetime argument x must be >= 0");
    if (!(theta > 0.0)) throw std::domain_error("lifetime parameter theta must be > 0");
}

}  // namespace

const char* kind_name(LifetimeKind kind) {
    switch (kind) {
        case LifetimeKind::ExponentialMean: return "exponential_mean";
        case LifetimeKind::WeibullScaleRate: return "weibull_scale_rate";
        case LifetimeKind::LogLogisticScale: return "log_logistic_scale";
    }
    return "?";
}

SurvivalFamily SurvivalFamily::exponential_mean() {
    return SurvivalFamily(LifetimeKind::ExponentialMean, 0.0);
}

SurvivalFamily SurvivalFamily::weibull_scale_rate(double shape) {
    if (!(shape > 0.0)) throw std::domain_error("weibull shape must be > 0");
    return SurvivalFamily(LifetimeKind::WeibullScaleRate, shape);
}

SurvivalFamily SurvivalFamily::log_logistic_scale(double shape) {
    if (!(shape > 0.0)) throw std::domain_error("log-logistic shape must be > 0");
    return SurvivalFamily(LifetimeKind::LogLogisticScale, shape);
}

double SurvivalFamily::shape() const {
    if (!has_shape()) throw std::domain_error("exponential_mean has no shape parameter");
    return shape_;
}

double SurvivalFamily::sf(double x, double theta) const {
    check_args(x, theta);
    switch (kind_) {
        case LifetimeKind::ExponentialMean:
            return std::exp(-x / theta);
        case LifetimeKind::WeibullScaleRate:
            return std::exp(-theta * std::pow(x, shape_));
        case LifetimeKind::LogLogisticScale:
            return 1.0 / (1.0 + std::pow(x / theta, shape_));
    }
    return 0.0;
}

double SurvivalFamily::log_sf(double x, double theta) const {
    check_args(x, theta);
    switch (kind_) {
        case LifetimeKind::ExponentialMean:
            return -x / theta;
        case LifetimeKind::WeibullScaleRate:
            return -theta * std::pow(x, shape_);
        case LifetimeKind::LogLogisticScale:
            return -std::log1p(std::pow(x / theta, shape_));
    }
    return 0.0;
}

double SurvivalFamily::dlog_sf_dtheta(double x, double theta) const {
    check_args(x, theta);
    switch (kind_) {
        case LifetimeKind::ExponentialMean:
            return x / (theta * theta);
        case LifetimeKind::WeibullScaleRate:
            return -std::pow(x, shape_);
        case LifetimeKind::LogLogisticScale: {
            double r = std::pow(x / theta, shape_);
            return (shape_ / theta) * r / (1.0 + r);
        }
    }
    return 0.0;
}

double SurvivalFamily::quantile(double p, double theta) const {
    if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("quantile probability must lie in [0,1)");
    if (!(theta > 0.0)) throw std::domain_error("lifetime parameter theta must be > 0");
    switch (kind_) {
        case LifetimeKind::ExponentialMean:
            return -theta * std::log1p(-p);
        case LifetimeKind::WeibullScaleRate:
            return std::pow(-std::log1p(-p) / theta, 1.0 / shape_);
        case LifetimeKind::LogLogisticScale:
            return theta * std::pow(p / (1.0 - p), 1.0 / shape_);
    }
    return 0.0;
}

double SurvivalFamily::sf_inverse(double u, double theta) const {
    if (!(u > 0.0) || u > 1.0) throw std::domain_error("survival level u must lie in (0,1]");
    if (!(theta > 0.0)) throw std::domain_error("lifetime parameter theta must be > 0");
    switch (kind_) {
        case LifetimeKind::ExponentialMean:
            return -theta * std::log(u);
        case LifetimeKind::WeibullScaleRate:
            return std::pow(-std::log(u) / theta, 1.0 / shape_);
        case LifetimeKind::LogLogisticScale:
            return theta * std::pow((1.0 - u) / u, 1.0 / shape_);
    }
    return 0.0;
}

CurvatureTag SurvivalFamily::curvature_tag() const {
    if (kind_ == LifetimeKind::WeibullScaleRate)
        return {ThetaMonotonicity::DecreasingInTheta, ThetaLogCurvature::LogConvexInTheta};
    return {ThetaMonotonicity::IncreasingInTheta, ThetaLogCurvature::LogConcaveInTheta};
}

}  // namespace shockorder
