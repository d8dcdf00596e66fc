#pragma once

#include <utility>
#include <vector>

#include "qte/rng.hpp"
#include "qte/types.hpp"

namespace qte {

// Average within-pair and adjacent-pair covariate distances (Euclidean,
// powers r = 1 and 2). adjacent_* averages the four cross-block distances
// between the units of pairs 2k-1 and 2k.
struct DesignDiagnostics {
  double within_pair_dist[2] = {0.0, 0.0};    // r = 1, r = 2
  double adjacent_pair_dist[2] = {0.0, 0.0};  // r = 1, r = 2
  bool warn = false;  // adjacent exceeds factor * within
};

// Pairs 2n units on covariates. Scalar covariates: sort and pair
// consecutive entries. Vectors: greedy non-bipartite matching -- repeatedly
// join the closest unmatched couple, ties broken by lowest index.
// Deterministic given input order.
std::vector<std::pair<int, int>> match_pairs(
    const std::vector<std::vector<double>>& covariates);

// Within each pair, picks the treated unit by an independent fair coin.
// Returns a 0/1 vector indexed like the units.
std::vector<int> assign_treatment(const std::vector<std::pair<int, int>>& pairing,
                                  Rng& rng);

// Re-indexes pairs along a short path through pair midpoints: exact sort
// for scalar covariates, greedy nearest-neighbour from the lexicographically
// smallest midpoint otherwise. Never returns an ordering with a longer path
// than the input's. Observations are untouched.
MatchedSample reorder_pairs(const MatchedSample& sample);

// Path length sum ||mid[order[j]] - mid[order[j-1]]|| used by reorder_pairs.
double pair_path_objective(const MatchedSample& sample,
                           const std::vector<int>& order);

DesignDiagnostics diagnostics(const MatchedSample& sample, double warn_factor = 10.0);

}  // namespace qte
