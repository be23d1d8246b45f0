#include "maxleaf/search.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "maxleaf/generate.hpp"
#include "maxleaf/oracle.hpp"

namespace maxleaf {

namespace {

using Masks = std::vector<std::uint32_t>;

Masks to_masks(const Graph& g) {
  Masks adj(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (auto w : g.neighbors(v)) adj[v] |= 1u << w;
  }
  return adj;
}

Graph to_graph(const Masks& adj) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < adj.size(); ++u) {
    for (auto s = adj[u] >> (u + 1); s; s &= s - 1) {
      edges.push_back({u, static_cast<VertexId>(u + 1 + std::countr_zero(s))});
    }
  }
  return graph_from_sorted_edges(adj.size(), std::move(edges));
}

std::uint32_t reach(const Masks& adj, VertexId from) {
  std::uint32_t reached = 1u << from;
  std::uint32_t frontier = reached;
  while (frontier) {
    std::uint32_t next = 0;
    for (auto s = frontier; s; s &= s - 1) next |= adj[std::countr_zero(s)];
    frontier = next & ~reached;
    reached |= frontier;
  }
  return reached;
}

bool connected(const Masks& adj) { return reach(adj, 0) == (1u << adj.size()) - 1; }

/// True iff a/b > c/d, or equal ratio with the larger algorithm leaf count.
bool better(const TightInstance& x, const TightInstance& y) {
  const auto lhs = x.opt_leaves * y.alg_leaves;
  const auto rhs = y.opt_leaves * x.alg_leaves;
  if (lhs != rhs) return lhs > rhs;
  return x.alg_leaves > y.alg_leaves;
}

bool at_least(const TightInstance& x, const TightInstance& y) { return !better(y, x); }

}  // namespace

TightSearchResult tight_search(const TightSearchOptions& options) {
  if (options.n_min < 3 || options.n_min > options.n_max || options.n_max > 24) {
    throw std::invalid_argument("tight search needs 3 <= n_min <= n_max <= 24");
  }
  if (options.trials == 0) throw std::invalid_argument("tight search needs at least one trial");

  std::mt19937_64 rng(options.seed);
  auto evaluate = [&](const Masks& adj) {
    TightInstance inst;
    inst.graph = to_graph(adj);
    inst.alg_leaves = leaf_count(solve(inst.graph, options.policy).tree);
    inst.opt_leaves =
        options.trees_only ? inst.alg_leaves : max_leaf_via_dominating_sets(inst.graph);
    return inst;
  };

  TightSearchResult result;
  bool have_best = false;
  Masks current;
  TightInstance current_eval;
  const auto restart_every = std::max<std::uint64_t>(options.restart_every, 1);

  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    Masks candidate;
    if (trial % restart_every == 0) {
      const auto n = std::uniform_int_distribution<std::size_t>(options.n_min, options.n_max)(rng);
      const auto max_extra = options.trees_only ? 0 : std::min(n, n * (n - 1) / 2 - (n - 1));
      const auto m = n - 1 + std::uniform_int_distribution<std::size_t>(0, max_extra)(rng);
      candidate = to_masks(make_random_connected(n, m, rng()));
    } else {
      candidate = current;
      const auto n = static_cast<VertexId>(candidate.size());
      std::uniform_int_distribution<VertexId> pick(0, n - 1);
      const auto u = pick(rng);
      auto v = pick(rng);
      while (v == u) v = pick(rng);
      const std::uint32_t bu = 1u << u;
      const std::uint32_t bv = 1u << v;
      if (options.trees_only) {
        // Swap one tree edge at u for an edge reconnecting the two halves.
        if (candidate[u] == 0) continue;
        const auto nbrs = candidate[u];
        auto skip = std::uniform_int_distribution<int>(0, std::popcount(nbrs) - 1)(rng);
        auto s = nbrs;
        while (skip-- > 0) s &= s - 1;
        const auto w = static_cast<VertexId>(std::countr_zero(s));
        candidate[u] &= ~(1u << w);
        candidate[w] &= ~bu;
        const auto side = reach(candidate, u);
        std::vector<VertexId> a;
        std::vector<VertexId> b;
        for (VertexId x = 0; x < n; ++x) ((side >> x) & 1 ? a : b).push_back(x);
        const auto x = a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)];
        const auto y = b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng)];
        candidate[x] |= 1u << y;
        candidate[y] |= 1u << x;
      } else {
        candidate[u] ^= bv;
        candidate[v] ^= bu;
        if (!connected(candidate)) continue;
      }
    }

    const auto eval = evaluate(candidate);
    if (trial % restart_every == 0 || at_least(eval, current_eval)) {
      current = std::move(candidate);
      current_eval = eval;
    }
    if (!have_best || better(eval, result.best)) {
      result.best = eval;
      have_best = true;
    }
  }
  result.trials_run = options.trials;
  return result;
}

}  // namespace maxleaf
