#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace shockorder {

// Vector of strictly positive reals, length >= 1.
class ParamVector {
  public:
    explicit ParamVector(std::vector<double> values);
    ParamVector(std::initializer_list<double> values)
        : ParamVector(std::vector<double>(values)) {}

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }
    double total() const;

    bool operator==(const ParamVector&) const = default;

  private:
    std::vector<double> values_;
};

enum class Cone { DPlus, IPlus, Neither, Both };

const char* cone_name(Cone cone);

// Signed violations: <= 0 means the relation holds. Partial-sum comparisons
// carry tolerance tau = 1e-9 * max(1, total sum) to absorb float noise in
// user-supplied vectors; the *_violation values are raw (tolerance excluded).

// x majorized by y (x <=_m y): equal totals, top-k sums of x dominated by y's.
bool majorizes(const ParamVector& y, const ParamVector& x);
double majorization_violation(const ParamVector& y, const ParamVector& x);

// Weak supermajorization x <=^w y: bottom-k sums of x >= bottom-k sums of y.
bool weak_supermajorizes(const ParamVector& y, const ParamVector& x);
double weak_supermajorization_violation(const ParamVector& y, const ParamVector& x);

// Weak submajorization x <=_w y: top-k sums of x <= top-k sums of y.
bool weak_submajorizes(const ParamVector& y, const ParamVector& x);
double weak_submajorization_violation(const ParamVector& y, const ParamVector& x);

Cone cone(const ParamVector& v);
bool in_cone(const ParamVector& v, Cone required);  // Both satisfies either cone
double cone_violation(const ParamVector& v, Cone required);

}  // namespace shockorder
