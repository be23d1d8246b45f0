#pragma once

#include <cstdint>

#include "maxleaf/graph.hpp"
#include "maxleaf/tree.hpp"

namespace maxleaf {

struct TightSearchOptions {
  std::size_t n_min = 4;
  std::size_t n_max = 12;
  std::uint64_t trials = 100'000;  ///< graphs evaluated
  std::uint64_t seed = 0;
  StartPolicy policy = {};
  bool trees_only = false;  ///< restrict the search to trees (m = n - 1)
  std::uint64_t restart_every = 500;
};

struct TightInstance {
  Graph graph;
  std::size_t alg_leaves = 0;
  std::size_t opt_leaves = 0;

  double ratio() const {
    return alg_leaves == 0 ? 1.0 : static_cast<double>(opt_leaves) / alg_leaves;
  }
  /// opt >= 2 alg - 2, the ratio of the known worst case.
  bool reaches_tight_ratio() const { return opt_leaves + 2 >= 2 * alg_leaves; }
};

struct TightSearchResult {
  TightInstance best;
  std::uint64_t trials_run = 0;
};

/// Randomized local search for graphs on which the solver is far from the
/// optimum. Restarts from a random sparse connected graph every
/// `restart_every` trials and otherwise mutates the current graph by
/// toggling one vertex pair, keeping it connected and accepting moves that
/// do not lower opt/alg. Optima come from max_leaf_via_dominating_sets.
/// The best instance maximizes opt/alg, then alg, then is the earliest found.
TightSearchResult tight_search(const TightSearchOptions& options);

}  // namespace maxleaf
