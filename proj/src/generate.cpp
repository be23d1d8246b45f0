#include "maxleaf/generate.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "maxleaf/search.hpp"

namespace maxleaf {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
}

std::vector<Edge> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  edges.reserve(n - 1);
  if (n == 2) {
    edges.push_back({0, 1});
    return edges;
  }
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = pick(rng);

  // Linear-time Pruefer decoding.
  std::vector<std::uint32_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  VertexId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  VertexId leaf = ptr;
  for (auto v : code) {
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({std::min<VertexId>(leaf, n - 1), std::max<VertexId>(leaf, n - 1)});
  return edges;
}

std::uint64_t param(const InstanceSpec& spec, std::size_t i, const char* family) {
  require(spec.params.size() > i, std::string(family) + " needs " + std::to_string(i + 1) +
                                      " parameter(s)");
  return spec.params[i];
}

}  // namespace

Graph graph_from_sorted_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

Graph make_cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<VertexId>(n - 1)});
  return graph_from_sorted_edges(n, std::move(edges));
}

Graph make_star(std::size_t n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({0, v});
  return graph_from_sorted_edges(n, std::move(edges));
}

Graph make_complete(std::size_t n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return graph_from_sorted_edges(n, std::move(edges));
}

Graph make_grid(std::size_t rows, std::size_t cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return graph_from_sorted_edges(rows * cols, std::move(edges));
}

Graph make_random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(n >= 1, "random_connected needs n >= 1");
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  require(m + 1 >= n, "random_connected needs m >= n - 1");
  require(m <= max_edges, "random_connected needs m <= n(n-1)/2");

  std::mt19937_64 rng(seed);
  auto edges = random_tree_edges(n, rng);
  const auto extra = m - edges.size();
  if (extra == 0) return graph_from_sorted_edges(n, std::move(edges));

  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * m);
  for (const auto& e : edges) present.insert(pair_key(e.u, e.v));

  if (max_edges <= 4 * m) {
    // Dense request: sample from the explicit list of non-tree pairs.
    std::vector<Edge> candidates;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (!present.contains(pair_key(u, v))) candidates.push_back({u, v});
      }
    }
    for (std::size_t i = 0; i < extra; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
      std::swap(candidates[i], candidates[pick(rng)]);
      edges.push_back(candidates[i]);
    }
  } else {
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    while (edges.size() < m) {
      const auto u = pick(rng);
      const auto v = pick(rng);
      if (u == v || !present.insert(pair_key(u, v)).second) continue;
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  return graph_from_sorted_edges(n, std::move(edges));
}

Graph generate(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::cycle: return make_cycle(param(spec, 0, "cycle"));
    case Family::star: return make_star(param(spec, 0, "star"));
    case Family::complete: return make_complete(param(spec, 0, "complete"));
    case Family::grid: return make_grid(param(spec, 0, "grid"), param(spec, 1, "grid"));
    case Family::random_connected:
      return make_random_connected(param(spec, 0, "random_connected"),
                                   param(spec, 1, "random_connected"), spec.seed);
    case Family::tight_search: {
      TightSearchOptions opts;
      opts.n_max = param(spec, 0, "tight_search");
      opts.trials = param(spec, 1, "tight_search");
      opts.seed = spec.seed;
      return tight_search(opts).best.graph;
    }
  }
  throw std::invalid_argument("unknown family");
}

InstanceSpec InstanceSpec::parse(std::string_view text, std::uint64_t seed) {
  InstanceSpec spec;
  spec.seed = seed;
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  if (name == "cycle") {
    spec.family = Family::cycle;
  } else if (name == "star") {
    spec.family = Family::star;
  } else if (name == "complete") {
    spec.family = Family::complete;
  } else if (name == "grid") {
    spec.family = Family::grid;
  } else if (name == "random" || name == "random_connected") {
    spec.family = Family::random_connected;
  } else if (name == "tight" || name == "tight_search") {
    spec.family = Family::tight_search;
  } else {
    throw std::invalid_argument("unknown generator family '" + std::string(name) + "'");
  }
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("generator spec '" + std::string(text) + "' has no parameters");
  }
  auto rest = text.substr(colon + 1);
  while (true) {
    const auto sep = rest.find_first_of(",x");
    const auto token = rest.substr(0, sep);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad generator parameter '" + std::string(token) + "'");
    }
    spec.params.push_back(value);
    if (sep == std::string_view::npos) break;
    rest = rest.substr(sep + 1);
  }
  return spec;
}

std::string InstanceSpec::to_string() const {
  static constexpr const char* names[] = {"cycle", "star",   "complete",
                                          "grid",  "random", "tight"};
  std::string out = names[static_cast<int>(family)];
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  }
  return out;
}

}  // namespace maxleaf
