#include "shockorder/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace shockorder {

namespace {

void check_lengths(const ParamVector& a, const ParamVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("majorization comparands must have equal length");
}

double tolerance(const ParamVector& a, const ParamVector& b) {
    return 1e-9 * std::max(1.0, std::max(a.total(), b.total()));
}

std::vector<double> sorted_desc(const ParamVector& v) {
    std::vector<double> s(v.values().begin(), v.values().end());
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

}  // namespace

ParamVector::ParamVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("parameter vector must be non-empty");
    for (double v : values_)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::domain_error("parameter vector entries must be finite and > 0");
}

double ParamVector::total() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

const char* cone_name(Cone c) {
    switch (c) {
        case Cone::DPlus: return "D+";
        case Cone::IPlus: return "I+";
        case Cone::Neither: return "neither";
        case Cone::Both: return "constant";
    }
    return "?";
}

double majorization_violation(const ParamVector& y, const ParamVector& x) {
    check_lengths(y, x);
    auto xs = sorted_desc(x);
    auto ys = sorted_desc(y);
    double worst = std::abs(x.total() - y.total());
    double cx = 0.0, cy = 0.0;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {  // last partial sum is the total
        cx += xs[k];
        cy += ys[k];
        worst = std::max(worst, cx - cy);
    }
    return worst;
}

bool majorizes(const ParamVector& y, const ParamVector& x) {
    return majorization_violation(y, x) <= tolerance(y, x);
}

double weak_supermajorization_violation(const ParamVector& y, const ParamVector& x) {
    check_lengths(y, x);
    auto xs = sorted_desc(x);
    auto ys = sorted_desc(y);
    double cx = 0.0, cy = 0.0, worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = xs.size(); k-- > 0;) {  // bottom-k sums, smallest entries first
        cx += xs[k];
        cy += ys[k];
        worst = std::max(worst, cy - cx);
    }
    return worst;
}

bool weak_supermajorizes(const ParamVector& y, const ParamVector& x) {
    return weak_supermajorization_violation(y, x) <= tolerance(y, x);
}

double weak_submajorization_violation(const ParamVector& y, const ParamVector& x) {
    check_lengths(y, x);
    auto xs = sorted_desc(x);
    auto ys = sorted_desc(y);
    double cx = 0.0, cy = 0.0, worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        cx += xs[k];
        cy += ys[k];
        worst = std::max(worst, cx - cy);
    }
    return worst;
}

bool weak_submajorizes(const ParamVector& y, const ParamVector& x) {
    return weak_submajorization_violation(y, x) <= tolerance(y, x);
}

Cone cone(const ParamVector& v) {
    bool noninc = true, nondec = true;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] < v[i + 1]) noninc = false;
        if (v[i] > v[i + 1]) nondec = false;
    }
    if (noninc && nondec) return Cone::Both;
    if (noninc) return Cone::DPlus;
    if (nondec) return Cone::IPlus;
    return Cone::Neither;
}

bool in_cone(const ParamVector& v, Cone required) {
    Cone c = cone(v);
    return c == required || c == Cone::Both;
}

double cone_violation(const ParamVector& v, Cone required) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        double step = v[i + 1] - v[i];  // positive step violates D+, negative violates I+
        worst = std::max(worst, required == Cone::DPlus ? step : -step);
    }
    return v.size() > 1 ? worst : 0.0;
}

}  // namespace shockorder
