#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxleaf/graph.hpp"
#include "maxleaf/tree.hpp"

namespace maxleaf {

using Rank = std::uint32_t;

/// Per-vertex ranks derived from an expansion trace. The start vertex has
/// rank 1; vertices added by a W2 expansion inherit the center's rank, and
/// the single vertex added by a W1 or W0 expansion gets one more than the
/// largest rank present in the tree before that step.
struct RankAssignment {
  std::vector<Rank> rank;

  Rank operator[](VertexId v) const { return rank[v]; }
};

/// Raised when a trace cannot have come from a run on the given graph.
class TraceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an analysis invariant fails. The witness names the vertices
/// involved; a failure means the solver or the analysis has a bug.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(const std::string& what, std::vector<VertexId> witness)
      : std::logic_error(what), witness_(std::move(witness)) {}

  const std::vector<VertexId>& witness() const noexcept { return witness_; }

 private:
  std::vector<VertexId> witness_;
};

RankAssignment assign_ranks(const Graph& g, const ExpansionTrace& trace);

struct ForestComponent {
  Rank rank = 0;
  std::vector<VertexId> vertices;  ///< ascending
  std::vector<VertexId> leaves;    ///< F-degree 1, ascending
  std::size_t degree_two = 0;      ///< vertices with F-degree exactly 2
};

/// The output tree with every edge between differently ranked endpoints
/// removed.
struct RankForest {
  std::vector<std::uint32_t> degree;        ///< F-degree per vertex
  std::vector<std::uint32_t> component_of;  ///< index into components
  std::vector<ForestComponent> components;  ///< ordered by rank

  std::size_t singleton_count() const;
  std::size_t big_count() const;  ///< components with >= 3 vertices
  std::size_t leaf_count() const;
};

/// Throws InvariantViolation if a component is not exactly one rank class,
/// has exactly two vertices, or (when larger) has two vertices of F-degree 2.
RankForest build_forest(const Graph& g, const SpanningTree& t, const RankAssignment& r);

struct Certificate {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t leaf_count = 0;
  std::size_t u_size = 0;       ///< vertices whose rank no other vertex has
  std::size_t k = 0;            ///< forest components with >= 3 vertices
  std::size_t upper_bound = 0;  ///< n - u_size - k + 1 >= leaves of any spanning tree

  double ratio_bound() const {
    return leaf_count == 0 ? 0.0 : static_cast<double>(upper_bound) / leaf_count;
  }

  /// Key-value lines n, m, leaves, u_size, k, upper_bound, ratio_bound.
  std::string to_text() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class UnsupportedSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requires n >= 3. Throws InvariantViolation when any of
///   leaves <= upper_bound,
///   n - u_size <= 2 leaves + k - 2,
///   upper_bound <= 2 leaves - 1,
///   k >= 1
/// fails.
Certificate compute_certificate(const Graph& g, const SpanningTree& t, const RankForest& f);

struct LemmaCheck {
  std::string_view name;
  std::vector<std::vector<VertexId>> witnesses;
  std::size_t checked = 0;  ///< antecedents examined
  bool truncated = false;   ///< witness list hit the cap

  bool pass() const noexcept { return witnesses.empty(); }
};

/// Outcome of the four rank lemmas:
///   path:   a G-path u-v-w with u, v of unique rank and r(u) < r(v) < r(w)
///           forces deg(v) = 2; witness (u, v, w).
///   ascent: every vertex has at most one neighbor of higher rank;
///           witness (u, v, w) with v, w the higher neighbors.
///   branch: an F-degree >= 2 vertex u has no neighbor of higher rank;
///           witness (u, v).
///   leaf:   an edge from a unique-rank u to an F-leaf v has r(u) > r(v);
///           witness (u, v).
struct LemmaReport {
  std::array<LemmaCheck, 4> checks{{{"path", {}}, {"ascent", {}}, {"branch", {}}, {"leaf", {}}}};

  bool pass() const noexcept {
    for (const auto& c : checks) {
      if (!c.pass()) return false;
    }
    return true;
  }
};

LemmaReport check_lemmas(const Graph& g, const RankAssignment& r, const RankForest& f,
                         std::size_t max_witnesses = 64);

/// Everything derived from one solve.
struct CertifiedRun {
  Solution solution;
  RankAssignment ranks;
  RankForest forest;
  Certificate certificate;
  LemmaReport lemmas;
};

/// solve + ranks + forest + certificate + lemma checks. Propagates the
/// errors of each stage.
CertifiedRun certify(const Graph& g, StartPolicy policy = {});

}  // namespace maxleaf
