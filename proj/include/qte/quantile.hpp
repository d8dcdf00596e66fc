#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qte/errors.hpp"
#include "qte/types.hpp"

namespace qte {

// Asymmetric check loss rho_tau(u) = u*(tau - 1{u <= 0}).
struct CheckLoss {
  double tau;
  explicit CheckLoss(double t) : tau(t) {
    if (!(t > 0.0 && t < 1.0)) throw BadConfig("CheckLoss: tau must be in (0,1)");
  }
  double operator()(double u) const { return u * (tau - (u <= 0.0 ? 1.0 : 0.0)); }
};

// Order-statistic index for the sub-gradient solution: ceil(x), snapped to
// the nearest integer when x sits within rounding error of one (the exact
// integer case resolves to the lower endpoint), clamped to [1, n].
inline int order_index(double x, int n) {
  const double r = std::nearbyint(x);
  double k;
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x))) {
    k = r;
  } else {
    k = std::ceil(x);
  }
  if (k < 1.0) return 1;
  if (k > static_cast<double>(n)) return n;
  return static_cast<int>(k);
}

// tau-th empirical quantile: the ceil(n*tau)-th order statistic, taking the
// lower endpoint when n*tau is an integer. Always an element of `values`.
double empirical_quantile(const std::vector<double>& values, double tau);

// Same, given an ascending-sorted vector (no copy).
double empirical_quantile_sorted(const std::vector<double>& sorted, double tau);

// Weighted tau-quantile via the sub-gradient bracket: the smallest value v
// with  C(v) <= tau*W <= C(v) + W_v,  where C(v) is the total weight of
// strictly smaller values and W_v the weight at v (duplicates grouped).
// This is the exact minimizer of sum_i w_i * rho_tau(y_i - q) over q in
// `values`. Weights must be nonnegative with positive total.
double weighted_quantile(const std::vector<double>& values,
                         const std::vector<double>& weights, double tau);

namespace detail {

// Pre-sorted arm: sort permutation plus duplicate-value group boundaries,
// reusable across bootstrap replicates that only change weights.
struct SortedValues {
  std::vector<double> values;     // original order
  std::vector<int> perm;          // indices sorted by (value, index)
  std::vector<int> group_start;   // group g spans perm[group_start[g] ..
                                  // group_start[g+1])
  explicit SortedValues(std::vector<double> v);
  SortedValues() = default;

  int size() const { return static_cast<int>(values.size()); }
  double sorted_value(int rank1) const {  // 1-based order statistic
    return values[static_cast<size_t>(perm[static_cast<size_t>(rank1 - 1)])];
  }
};

// One ascending pass for several taus (taus must be ascending). `weights`
// is indexed like the original `values`. Writes one quantile per tau.
void weighted_quantile_multi(const SortedValues& sv,
                             const std::vector<double>& weights,
                             const std::vector<double>& taus_ascending,
                             double* out);

}  // namespace detail

// Difference-in-quantiles estimator: treated quantile minus control
// quantile at each grid point.
std::vector<double> diq_estimate(const MatchedSample& sample,
                                 const QuantileGrid& grid);

// Difference in means.
double ate_estimate(const MatchedSample& sample);

}  // namespace qte
