#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxleaf/graph.hpp"

namespace maxleaf {

/// Rooted spanning tree stored as a parent array. parent[root] == kNoVertex.
struct SpanningTree {
  VertexId root = 0;
  std::vector<VertexId> parent;
  /// Vertices of tree-degree exactly 1, ascending.
  std::vector<VertexId> leaves;

  std::size_t num_vertices() const noexcept { return parent.size(); }
  std::optional<VertexId> parent_of(VertexId v) const {
    return parent[v] == kNoVertex ? std::nullopt : std::optional<VertexId>(parent[v]);
  }
  /// Tree edges (child's parent link) normalized to u < v and sorted.
  std::vector<Edge> edges() const;

  /// Builds a tree from a parent array and fills `leaves`.
  static SpanningTree from_parents(VertexId root, std::vector<VertexId> parent);
  /// Roots an edge set that forms a spanning tree of n vertices at `root`.
  static SpanningTree from_edges(std::size_t n, std::span<const Edge> edges, VertexId root);
};

std::size_t leaf_count(const SpanningTree& t);

enum class TreeDefect {
  none,
  wrong_vertex_count,
  root_has_parent,
  parent_out_of_range,
  missing_vertex,
  non_edge,
  cycle,
};

std::string_view to_string(TreeDefect d);

struct TreeCheck {
  TreeDefect defect = TreeDefect::none;
  VertexId vertex = kNoVertex;  ///< offending vertex, when one exists

  explicit operator bool() const noexcept { return defect == TreeDefect::none; }
};

/// Checks that `t` has n-1 parent links, all of them edges of `g`, forming
/// an acyclic structure that reaches the root from every vertex.
TreeCheck verify_spanning_tree(const Graph& g, const SpanningTree& t);

// ---------------------------------------------------------------------------
// Greedy expansion algorithm

/// Which waiting list the expanded vertex was taken from.
enum class StepCase : std::uint8_t { W2, W1, W0 };

std::string_view to_string(StepCase c);

struct ExpansionStep {
  VertexId center;
  StepCase kind;
  std::span<const VertexId> added;
};

/// Ordered record of the expansions performed by solve(). Only expansions
/// that added at least one vertex are recorded.
class ExpansionTrace {
 public:
  explicit ExpansionTrace(VertexId start = 0) : start_(start) {}

  VertexId start() const noexcept { return start_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  ExpansionStep operator[](std::size_t i) const {
    const auto& s = steps_[i];
    return {s.center, s.kind,
            std::span<const VertexId>(added_.data() + s.first, s.count)};
  }

  /// Opens a new step; follow with add() for each vertex joining the tree.
  void begin(VertexId center, StepCase kind) {
    steps_.push_back({center, kind, static_cast<std::uint32_t>(added_.size()), 0});
  }
  void add(VertexId v) {
    added_.push_back(v);
    ++steps_.back().count;
  }
  void reserve(std::size_t n) { added_.reserve(n); }

  /// One "step=<i> case=<W2|W1|W0> center=<u> added=<list>" line per step,
  /// steps numbered from 1 and `added` comma-separated.
  std::string debug_lines() const;

  friend bool operator==(const ExpansionTrace&, const ExpansionTrace&) = default;

 private:
  struct Record {
    VertexId center;
    StepCase kind;
    std::uint32_t first;
    std::uint32_t count;
    friend bool operator==(const Record&, const Record&) = default;
  };

  VertexId start_;
  std::vector<Record> steps_;
  std::vector<VertexId> added_;
};

struct StartPolicy {
  enum class Kind { first_eligible, max_degree, explicit_vertex };

  Kind kind = Kind::first_eligible;
  VertexId vertex = 0;  ///< used by explicit_vertex only

  static StartPolicy first_eligible() { return {}; }
  static StartPolicy max_degree() { return {Kind::max_degree, 0}; }
  static StartPolicy at(VertexId v) { return {Kind::explicit_vertex, v}; }

  /// Accepts "first", "maxdeg", or "vertex:<id>".
  static StartPolicy parse(std::string_view text);
};

class NotConnectedError : public std::invalid_argument {
 public:
  NotConnectedError() : std::invalid_argument("input graph is not connected") {}
};

class InvalidStartError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Picks the initial tree vertex. For n <= 2 this is always vertex 0.
VertexId pick_start(const Graph& g, StartPolicy policy);

struct Solution {
  SpanningTree tree;
  ExpansionTrace trace;
  /// Adjacency entries read by the scheduler, for work accounting.
  std::uint64_t touches = 0;
};

/// Builds a spanning tree with the three-waiting-list expansion scheduler.
///
/// Newly spanned vertices enter W2 (FIFO). A vertex popped from W2 with one
/// unspanned neighbor moves to W1 (FIFO); with two or more it is expanded. A
/// vertex popped from W1 moves to W0 (LIFO) when its unique unspanned
/// neighbor would itself have exactly one unspanned neighbor, otherwise it is
/// expanded. W0 is consulted only when W2 and W1 are both empty. Vertices
/// with no unspanned neighbor are dropped when popped. Runs in O(n + m).
///
/// Throws NotConnectedError or InvalidStartError.
Solution solve(const Graph& g, StartPolicy policy = {});

}  // namespace maxleaf
