#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "maxleaf/graph.hpp"

namespace maxleaf {

enum class Family { cycle, star, complete, grid, random_connected, tight_search };

/// Family parameters:
///   cycle(n), star(n), complete(n), grid(rows, cols),
///   random_connected(n, m), tight_search(n_max, trials).
struct InstanceSpec {
  Family family = Family::cycle;
  std::vector<std::uint64_t> params;
  std::uint64_t seed = 0;

  /// "cycle:5", "grid:3x3", "random:50,100", "tight:12,100000". The family
  /// names random_connected and tight_search are accepted as well.
  static InstanceSpec parse(std::string_view text, std::uint64_t seed = 0);
  std::string to_string() const;
};

/// Deterministic in `spec`. Neighbors are emitted in ascending id order.
/// Throws std::invalid_argument on infeasible parameters.
Graph generate(const InstanceSpec& spec);

Graph make_cycle(std::size_t n);
Graph make_star(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_grid(std::size_t rows, std::size_t cols);

/// Uniform random labeled spanning tree (Pruefer decoding) plus m - n + 1
/// distinct random non-tree edges.
Graph make_random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

/// Builds a graph with neighbors in ascending order regardless of input order.
Graph graph_from_sorted_edges(std::size_t n, std::vector<Edge> edges);

}  // namespace maxleaf
