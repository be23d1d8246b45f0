#include "maxleaf/graph.hpp"

#include <algorithm>
#include <numeric>

namespace maxleaf {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) {
    throw GraphError(GraphError::Kind::empty_graph, GraphError::kNoIndex,
                     "graph must have at least one vertex");
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      throw GraphError(GraphError::Kind::vertex_out_of_range, i,
                       "vertex id out of range in edge " + std::to_string(u) + " " +
                           std::to_string(v) + " (n=" + std::to_string(n) + ")");
    }
    if (u == v) {
      throw GraphError(GraphError::Kind::self_loop, i,
                       "self-loop at vertex " + std::to_string(u));
    }
  }

  // Duplicate detection on normalized keys; ties resolved so the reported
  // index is the later occurrence.
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto key = [&](std::size_t i) {
    const auto [u, v] = edges[i];
    return Edge{std::min(u, v), std::max(u, v)};
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ka = key(a);
    const auto kb = key(b);
    return ka != kb ? ka < kb : a < b;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (key(order[i]) == key(order[i - 1])) {
      const auto [u, v] = key(order[i]);
      throw GraphError(GraphError::Kind::duplicate_edge, order[i],
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  const auto a = degree(u) <= degree(v) ? u : v;
  const auto b = a == u ? v : u;
  const auto nbrs = neighbors(a);
  return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  const auto n = g.num_vertices();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (VertexId v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

}  // namespace maxleaf
