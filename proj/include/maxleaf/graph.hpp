#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxleaf {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/// Undirected edge. Graph::edges() normalizes so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown by Graph::from_edges. `edge_index` is the position of the offending
/// edge in the input sequence (kNoIndex for whole-graph problems).
class GraphError : public std::invalid_argument {
 public:
  enum class Kind { empty_graph, vertex_out_of_range, self_loop, duplicate_edge };

  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  GraphError(Kind kind, std::size_t edge_index, const std::string& what)
      : std::invalid_argument(what), kind_(kind), edge_index_(edge_index) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t edge_index() const noexcept { return edge_index_; }

 private:
  Kind kind_;
  std::size_t edge_index_;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Each vertex's neighbors are stored in the order its edges appeared in the
/// input sequence. Construction rejects self-loops, duplicate edges, and
/// endpoints outside [0, n).
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(VertexId u, VertexId v) const noexcept;

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

/// True iff a traversal from vertex 0 reaches every vertex. True for n = 1.
bool is_connected(const Graph& g);

}  // namespace maxleaf
