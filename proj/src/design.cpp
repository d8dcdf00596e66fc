#include "qte/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qte {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

std::vector<std::vector<double>> pair_midpoints(const MatchedSample& sample) {
  std::vector<std::vector<double>> mids;
  mids.reserve(sample.pairs().size());
  for (const auto& [u, v] : sample.pairs()) {
    const auto& xu = sample.obs(u).x;
    const auto& xv = sample.obs(v).x;
    std::vector<double> m(xu.size());
    for (size_t k = 0; k < xu.size(); ++k) m[k] = 0.5 * (xu[k] + xv[k]);
    mids.push_back(std::move(m));
  }
  return mids;
}

double path_length(const std::vector<std::vector<double>>& mids,
                   const std::vector<int>& order) {
  double s = 0.0;
  for (size_t j = 1; j < order.size(); ++j) {
    s += std::sqrt(sq_dist(mids[static_cast<size_t>(order[j])],
                           mids[static_cast<size_t>(order[j - 1])]));
  }
  return s;
}

}  // namespace

std::vector<std::pair<int, int>> match_pairs(
    const std::vector<std::vector<double>>& covariates) {
  const int m = static_cast<int>(covariates.size());
  if (m == 0) throw EmptyInput("match_pairs: no units");
  if (m % 2 != 0) throw OddCount("match_pairs: unit count must be even, got " +
                                 std::to_string(m));
  const size_t d = covariates.front().size();
  if (d == 0) throw BadConfig("match_pairs: empty covariate vectors");
  for (const auto& x : covariates) {
    if (x.size() != d) throw BadConfig("match_pairs: inconsistent covariate dimension");
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(m / 2));

  if (d == 1) {
    std::vector<int> idx(static_cast<size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
      const double a = covariates[static_cast<size_t>(i)][0];
      const double b = covariates[static_cast<size_t>(j)][0];
      return a < b || (a == b && i < j);
    });
    for (int j = 0; j < m; j += 2) {
      pairs.emplace_back(idx[static_cast<size_t>(j)], idx[static_cast<size_t>(j + 1)]);
    }
    return pairs;
  }

  // Greedy non-bipartite matching on all candidate edges.
  struct Edge {
    double d2;
    int i, j;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m) * (m - 1) / 2);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      edges.push_back({sq_dist(covariates[static_cast<size_t>(i)],
                               covariates[static_cast<size_t>(j)]),
                       i, j});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.d2 != b.d2) return a.d2 < b.d2;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<char> used(static_cast<size_t>(m), 0);
  for (const Edge& e : edges) {
    if (used[static_cast<size_t>(e.i)] || used[static_cast<size_t>(e.j)]) continue;
    used[static_cast<size_t>(e.i)] = used[static_cast<size_t>(e.j)] = 1;
    pairs.emplace_back(e.i, e.j);
    if (static_cast<int>(pairs.size()) == m / 2) break;
  }
  return pairs;
}

std::vector<int> assign_treatment(const std::vector<std::pair<int, int>>& pairing,
                                  Rng& rng) {
  int max_idx = -1;
  for (const auto& [u, v] : pairing) max_idx = std::max({max_idx, u, v});
  std::vector<int> a(static_cast<size_t>(max_idx + 1), 0);
  for (const auto& [u, v] : pairing) {
    if (rng.uniform01() < 0.5) {
      a[static_cast<size_t>(u)] = 1;
    } else {
      a[static_cast<size_t>(v)] = 1;
    }
  }
  return a;
}

double pair_path_objective(const MatchedSample& sample,
                           const std::vector<int>& order) {
  if (!sample.has_pairs()) throw MissingPairs("pair_path_objective needs pairs");
  return path_length(pair_midpoints(sample), order);
}

MatchedSample reorder_pairs(const MatchedSample& sample) {
  if (!sample.has_pairs()) throw MissingPairs("reorder_pairs needs pair identities");
  const int n = sample.n_pairs();
  const auto mids = pair_midpoints(sample);

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (n <= 2) return sample.with_pair_order(order);

  if (sample.dim_x() == 1) {
    // Sorting midpoints is the exact path minimizer in one dimension.
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      const double a = mids[static_cast<size_t>(i)][0];
      const double b = mids[static_cast<size_t>(j)][0];
      return a < b || (a == b && i < j);
    });
    return sample.with_pair_order(order);
  }

  // Greedy nearest-neighbour path from the lexicographically smallest midpoint.
  int start = 0;
  for (int j = 1; j < n; ++j) {
    if (mids[static_cast<size_t>(j)] < mids[static_cast<size_t>(start)]) start = j;
  }
  std::vector<int> path;
  path.reserve(static_cast<size_t>(n));
  std::vector<char> used(static_cast<size_t>(n), 0);
  int cur = start;
  used[static_cast<size_t>(cur)] = 1;
  path.push_back(cur);
  for (int step = 1; step < n; ++step) {
    int best = -1;
    double best_d = 0.0;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      const double dj = sq_dist(mids[static_cast<size_t>(cur)], mids[static_cast<size_t>(j)]);
      if (best < 0 || dj < best_d) {
        best = j;
        best_d = dj;
      }
    }
    used[static_cast<size_t>(best)] = 1;
    path.push_back(best);
    cur = best;
  }

  // Keep the input order if the heuristic did not improve on it.
  if (path_length(mids, path) > path_length(mids, order)) return sample.with_pair_order(order);
  return sample.with_pair_order(path);
}

DesignDiagnostics diagnostics(const MatchedSample& sample, double warn_factor) {
  if (!sample.has_pairs()) throw MissingPairs("diagnostics needs pair identities");
  DesignDiagnostics d;
  const int n = sample.n_pairs();
  for (const auto& [u, v] : sample.pairs()) {
    const double dist = std::sqrt(sq_dist(sample.obs(u).x, sample.obs(v).x));
    d.within_pair_dist[0] += dist;
    d.within_pair_dist[1] += dist * dist;
  }
  d.within_pair_dist[0] /= n;
  d.within_pair_dist[1] /= n;

  const int half = n / 2;
  if (half > 0) {
    const RoleIndex roles = pair_roles(sample);
    for (int k = 0; k < half; ++k) {
      const auto& q = roles.quads[static_cast<size_t>(k)];
      // Cross-block distances: units of pair 2k-1 against units of pair 2k.
      const std::pair<int, int> cross[4] = {
          {q[0], q[2]}, {q[0], q[3]}, {q[1], q[2]}, {q[1], q[3]}};
      for (const auto& [u, v] : cross) {
        const double dist = std::sqrt(sq_dist(sample.obs(u).x, sample.obs(v).x));
        d.adjacent_pair_dist[0] += dist / 4.0;
        d.adjacent_pair_dist[1] += dist * dist / 4.0;
      }
    }
    d.adjacent_pair_dist[0] /= half;
    d.adjacent_pair_dist[1] /= half;
  }

  d.warn = d.adjacent_pair_dist[0] > warn_factor * d.within_pair_dist[0] &&
           d.adjacent_pair_dist[0] > 0.0;
  return d;
}

}  // namespace qte
