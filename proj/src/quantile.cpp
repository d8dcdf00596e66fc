#include "qte/quantile.hpp"

#include <numeric>

namespace qte {

double empirical_quantile_sorted(const std::vector<double>& sorted, double tau) {
  if (sorted.empty()) throw EmptyInput("empirical_quantile: no values");
  if (!(tau > 0.0 && tau < 1.0)) throw BadConfig("empirical_quantile: tau in (0,1)");
  const int n = static_cast<int>(sorted.size());
  const int h = order_index(static_cast<double>(n) * tau, n);
  return sorted[static_cast<size_t>(h - 1)];
}

double empirical_quantile(const std::vector<double>& values, double tau) {
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  return empirical_quantile_sorted(sorted, tau);
}

namespace detail {

SortedValues::SortedValues(std::vector<double> v) : values(std::move(v)) {
  const int n = static_cast<int>(values.size());
  perm.resize(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int i, int j) {
    const double a = values[static_cast<size_t>(i)];
    const double b = values[static_cast<size_t>(j)];
    return a < b || (a == b && i < j);
  });
  group_start.push_back(0);
  for (int i = 1; i < n; ++i) {
    if (values[static_cast<size_t>(perm[static_cast<size_t>(i)])] !=
        values[static_cast<size_t>(perm[static_cast<size_t>(i - 1)])]) {
      group_start.push_back(i);
    }
  }
  group_start.push_back(n);
}

void weighted_quantile_multi(const SortedValues& sv,
                             const std::vector<double>& weights,
                             const std::vector<double>& taus_ascending,
                             double* out) {
  const int n = sv.size();
  if (n == 0) throw EmptyInput("weighted_quantile: no values");
  if (static_cast<int>(weights.size()) != n) {
    throw BadConfig("weighted_quantile: length mismatch");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw BadConfig("weighted_quantile: negative weight");
    total += w;
  }
  if (!(total > 0.0)) throw ZeroTotalWeight("weighted quantile needs positive total weight");

  const int n_groups = static_cast<int>(sv.group_start.size()) - 1;
  auto group_weight = [&](int g) {
    double w = 0.0;
    for (int i = sv.group_start[static_cast<size_t>(g)];
         i < sv.group_start[static_cast<size_t>(g + 1)]; ++i) {
      w += weights[static_cast<size_t>(sv.perm[static_cast<size_t>(i)])];
    }
    return w;
  };

  double below = 0.0;  // C(v): weight strictly below current group
  int g = 0;
  double wg = group_weight(0);
  for (size_t t = 0; t < taus_ascending.size(); ++t) {
    const double target = taus_ascending[t] * total;
    while (g + 1 < n_groups && below + wg < target) {
      below += wg;
      ++g;
      wg = group_weight(g);
    }
    out[t] = sv.values[static_cast<size_t>(
        sv.perm[static_cast<size_t>(sv.group_start[static_cast<size_t>(g)])])];
  }
}

}  // namespace detail

double weighted_quantile(const std::vector<double>& values,
                         const std::vector<double>& weights, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw BadConfig("weighted_quantile: tau in (0,1)");
  detail::SortedValues sv(values);
  double out = 0.0;
  detail::weighted_quantile_multi(sv, weights, {tau}, &out);
  return out;
}

std::vector<double> diq_estimate(const MatchedSample& sample,
                                 const QuantileGrid& grid) {
  std::vector<double> y1 = sample.outcomes(1);
  std::vector<double> y0 = sample.outcomes(0);
  std::sort(y1.begin(), y1.end());
  std::sort(y0.begin(), y0.end());
  std::vector<double> out(static_cast<size_t>(grid.size()));
  for (int g = 0; g < grid.size(); ++g) {
    out[static_cast<size_t>(g)] =
        empirical_quantile_sorted(y1, grid[g]) - empirical_quantile_sorted(y0, grid[g]);
  }
  return out;
}

double ate_estimate(const MatchedSample& sample) {
  double sum1 = 0.0, sum0 = 0.0;
  int n1 = 0, n0 = 0;
  for (const auto& o : sample.observations()) {
    if (o.a == 1) {
      sum1 += o.y;
      ++n1;
    } else {
      sum0 += o.y;
      ++n0;
    }
  }
  if (n1 == 0 || n0 == 0) throw EmptyInput("ate_estimate: an arm is empty");
  return sum1 / n1 - sum0 / n0;
}

}  // namespace qte
