#pragma once

#include <cstdint>
#include <optional>

#include "maxleaf/certificate.hpp"
#include "maxleaf/graph.hpp"
#include "maxleaf/tree.hpp"

namespace maxleaf {

struct OracleOptions {
  std::uint64_t budget = 100'000'000;  ///< spanning trees to examine before giving up
  /// Skip subtrees whose leaf bound cannot beat the incumbent. Off by
  /// default; with it on, trees_examined no longer counts every tree.
  bool leaf_bound_pruning = false;
};

struct OracleResult {
  std::size_t opt_leaves = 0;
  SpanningTree witness;  ///< rooted at vertex 0
  std::uint64_t trees_examined = 0;
  bool complete = true;  ///< false when the budget ran out; opt_leaves is then a lower bound
};

/// Exhaustive maximum-leaf spanning tree by include/exclude branching over
/// the sorted edge list. Including an edge is refused when it closes a
/// cycle; excluding one is refused when the remaining edges could no longer
/// connect the graph, so every branch ends in a spanning tree. Among optimal
/// trees the lexicographically smallest sorted edge set is returned.
///
/// Throws NotConnectedError.
OracleResult max_leaf_exact(const Graph& g, OracleOptions options = {});

/// Maximum leaf count through n minus the minimum connected dominating set,
/// by subset enumeration. Independent of max_leaf_exact. Requires n <= 24.
std::size_t max_leaf_via_dominating_sets(const Graph& g);

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const OracleResult& partial)
      : std::runtime_error("oracle budget exhausted after " +
                           std::to_string(partial.trees_examined) + " trees"),
        partial_(partial) {}

  const OracleResult& partial() const noexcept { return partial_; }

 private:
  OracleResult partial_;
};

struct Comparison {
  std::size_t alg_leaves = 0;
  std::size_t opt_leaves = 0;
  double ratio = 1.0;  ///< opt / alg
  /// opt <= 2 alg - 1 (for n = 1: opt == alg).
  bool bound_ok = false;
  /// Certificate built, its invariants and lemmas hold, and opt <= upper_bound.
  /// Absent for n < 3, where no certificate exists.
  std::optional<bool> certificate_ok;
  std::optional<Certificate> certificate;
};

/// Runs the solver, the certificate pipeline and the exact oracle.
/// Throws BudgetExceeded when the oracle cannot finish.
Comparison compare(const Graph& g, StartPolicy policy = {}, OracleOptions options = {});

}  // namespace maxleaf
