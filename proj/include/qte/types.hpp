#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qte/errors.hpp"

namespace qte {

// One experimental unit: outcome, covariates, treatment flag, and an
// optional pair label carried from the input file.
struct Observation {
  double y = 0.0;
  std::vector<double> x;
  int a = 0;  // treatment indicator, 0 or 1
  std::optional<std::int64_t> pair_id;
};

// A validated matched-pairs sample of 2n units. Immutable after
// construction; safe to share read-only across bootstrap workers.
class MatchedSample {
public:
  MatchedSample() = default;

  const std::vector<Observation>& observations() const { return obs_; }
  const Observation& obs(int i) const { return obs_[static_cast<size_t>(i)]; }

  // Pair j as (first index, second index) in input order; empty when pair
  // identities are unknown.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool has_pairs() const { return !pairs_.empty(); }

  int n_pairs() const { return n_; }
  int n_units() const { return static_cast<int>(obs_.size()); }
  int dim_x() const { return obs_.empty() ? 0 : static_cast<int>(obs_[0].x.size()); }

  std::vector<double> outcomes(int arm) const;   // arm = 0 or 1
  std::vector<int> arm_indices(int arm) const;

  // Returns a copy whose pair list is re-indexed by `order` (a permutation
  // of 0..n-1). Observations are untouched.
  MatchedSample with_pair_order(const std::vector<int>& order) const;

  friend MatchedSample validate_sample(const std::vector<Observation>& raw,
                                       bool require_pairs);

private:
  std::vector<Observation> obs_;
  std::vector<std::pair<int, int>> pairs_;
  int n_ = 0;
};

// Checks the matched-pairs structure: equal arm counts, one treated unit
// per pair, complete pair labels. Pair list is built from pair_id when
// every unit carries one (groups ordered by pair_id value).
MatchedSample validate_sample(const std::vector<Observation>& raw,
                              bool require_pairs = false);

// Quantile indexes under analysis, strictly increasing within [0.01, 0.99].
class QuantileGrid {
public:
  explicit QuantileGrid(std::vector<double> taus);
  static QuantileGrid single(double tau) { return QuantileGrid({tau}); }

  const std::vector<double>& taus() const { return taus_; }
  int size() const { return static_cast<int>(taus_.size()); }
  double operator[](int i) const { return taus_[static_cast<size_t>(i)]; }

private:
  std::vector<double> taus_;
};

// Unit roles used by the gradient bootstrap score:
//   treated[j] / control[j] -- the treated / control unit of pair j;
//   quads[k] = {(k,1),(k,2),(k,3),(k,4)} -- over the block of pairs
//   2k-1, 2k (1-based), scanning units in stored order: first treated,
//   first control, second treated, second control.
// With odd n the last pair has no block partner and is excluded from quads.
struct RoleIndex {
  std::vector<int> treated;
  std::vector<int> control;
  std::vector<std::array<int, 4>> quads;
};

RoleIndex pair_roles(const MatchedSample& sample);

enum class BootstrapMethod { NaiveMultiplier, NaivePair, Gradient, IpwMultiplier };

std::string method_name(BootstrapMethod m);
BootstrapMethod parse_method(const std::string& name);

// B bootstrap replicates: a B x |grid| matrix for QTE draws, or a B-vector
// (one column) for ATE draws.
struct BootstrapDraws {
  BootstrapMethod method = BootstrapMethod::NaiveMultiplier;
  int b_reps = 0;
  int n_cols = 0;
  std::vector<double> values;  // row-major, b_reps x n_cols
  std::uint64_t seed = 0;
  bool is_ate = false;

  double at(int b, int g) const {
    return values[static_cast<size_t>(b) * n_cols + g];
  }
  // Column g as a contiguous vector.
  std::vector<double> column(int g) const;
};

}  // namespace qte
