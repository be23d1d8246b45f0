#include "maxleaf/certificate.hpp"

#include <algorithm>
#include <cstdio>

namespace maxleaf {

RankAssignment assign_ranks(const Graph& g, const ExpansionTrace& trace) {
  const auto n = g.num_vertices();
  if (trace.start() >= n) throw TraceError("trace start vertex out of range");

  RankAssignment r;
  r.rank.assign(n, 0);
  r.rank[trace.start()] = 1;
  Rank max_rank = 1;
  std::size_t spanned = 1;

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto step = trace[i];
    const auto where = "trace step " + std::to_string(i + 1) + ": ";
    if (step.center >= n || r.rank[step.center] == 0) {
      throw TraceError(where + "center " + std::to_string(step.center) + " is not in the tree");
    }
    if (step.kind == StepCase::W2 ? step.added.size() < 2 : step.added.size() != 1) {
      throw TraceError(where + std::string(to_string(step.kind)) + " step adds " +
                       std::to_string(step.added.size()) + " vertices");
    }
    const Rank assigned = step.kind == StepCase::W2 ? r.rank[step.center] : max_rank + 1;
    for (auto v : step.added) {
      if (v >= n || r.rank[v] != 0) {
        throw TraceError(where + "vertex " + std::to_string(v) + " added twice or out of range");
      }
      if (!g.has_edge(step.center, v)) {
        throw TraceError(where + "edge " + std::to_string(step.center) + "-" + std::to_string(v) +
                         " is not in the graph");
      }
      r.rank[v] = assigned;
      ++spanned;
    }
    max_rank = std::max(max_rank, assigned);
  }
  if (spanned != n) {
    throw TraceError("trace spans " + std::to_string(spanned) + " of " + std::to_string(n) +
                     " vertices");
  }
  return r;
}

std::size_t RankForest::singleton_count() const {
  return static_cast<std::size_t>(std::count_if(
      components.begin(), components.end(), [](const auto& c) { return c.vertices.size() == 1; }));
}

std::size_t RankForest::big_count() const {
  return static_cast<std::size_t>(std::count_if(
      components.begin(), components.end(), [](const auto& c) { return c.vertices.size() >= 3; }));
}

std::size_t RankForest::leaf_count() const {
  return static_cast<std::size_t>(std::count(degree.begin(), degree.end(), 1u));
}

RankForest build_forest(const Graph& g, const SpanningTree& t, const RankAssignment& r) {
  const auto n = g.num_vertices();
  if (t.parent.size() != n || r.rank.size() != n) {
    throw std::invalid_argument("tree, ranks and graph disagree on vertex count");
  }

  RankForest f;
  f.degree.assign(n, 0);
  // Label F-components by walking parent links that keep the rank.
  std::vector<VertexId> top(n, kNoVertex);
  std::vector<VertexId> path;
  auto find_top = [&](VertexId v) {
    path.clear();
    while (top[v] == kNoVertex) {
      const auto p = t.parent[v];
      if (p == kNoVertex || r[p] != r[v]) {
        top[v] = v;
        break;
      }
      path.push_back(v);
      v = p;
    }
    const auto root = top[v];
    for (auto x : path) top[x] = root;
    return root;
  };
  for (VertexId v = 0; v < n; ++v) {
    const auto p = t.parent[v];
    if (p != kNoVertex && r[p] == r[v]) {
      ++f.degree[v];
      ++f.degree[p];
    }
  }

  Rank max_rank = 0;
  for (auto x : r.rank) max_rank = std::max(max_rank, x);
  std::vector<VertexId> top_of_rank(max_rank + 1, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    const auto root = find_top(v);
    auto& owner = top_of_rank[r[v]];
    if (owner == kNoVertex) {
      owner = root;
    } else if (owner != root) {
      throw InvariantViolation("rank " + std::to_string(r[v]) + " spans two forest components",
                               {owner, root});
    }
  }

  f.component_of.assign(n, 0);
  std::vector<std::uint32_t> index_of_rank(max_rank + 1, 0);
  for (Rank k = 1; k <= max_rank; ++k) {
    if (top_of_rank[k] == kNoVertex) continue;
    index_of_rank[k] = static_cast<std::uint32_t>(f.components.size());
    f.components.push_back({k, {}, {}, 0});
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& c = f.components[index_of_rank[r[v]]];
    f.component_of[v] = index_of_rank[r[v]];
    c.vertices.push_back(v);
    if (f.degree[v] == 1) c.leaves.push_back(v);
    if (f.degree[v] == 2) ++c.degree_two;
  }

  for (const auto& c : f.components) {
    if (c.vertices.size() == 2) {
      throw InvariantViolation("forest component of rank " + std::to_string(c.rank) +
                                   " has exactly two vertices",
                               c.vertices);
    }
    if (c.vertices.size() >= 3 && c.degree_two > 1) {
      std::vector<VertexId> witness;
      for (auto v : c.vertices) {
        if (f.degree[v] == 2) witness.push_back(v);
      }
      throw InvariantViolation("forest component of rank " + std::to_string(c.rank) + " has " +
                                   std::to_string(c.degree_two) + " vertices of degree 2",
                               std::move(witness));
    }
  }
  // Unique-rank vertices must be exactly the isolated vertices of F.
  for (VertexId v = 0; v < n; ++v) {
    const bool unique = f.components[f.component_of[v]].vertices.size() == 1;
    if (unique != (f.degree[v] == 0)) {
      throw InvariantViolation("unique-rank set differs from isolated forest vertices", {v});
    }
  }
  return f;
}

std::string Certificate::to_text() const {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.4f", ratio_bound());
  return "n=" + std::to_string(n) + "\nm=" + std::to_string(m) +
         "\nleaves=" + std::to_string(leaf_count) + "\nu_size=" + std::to_string(u_size) +
         "\nk=" + std::to_string(k) + "\nupper_bound=" + std::to_string(upper_bound) +
         "\nratio_bound=" + ratio + "\n";
}

Certificate compute_certificate(const Graph& g, const SpanningTree& t, const RankForest& f) {
  const auto n = g.num_vertices();
  if (n < 3) {
    throw UnsupportedSizeError("certificate needs n >= 3 (got n=" + std::to_string(n) + ")");
  }
  Certificate c;
  c.n = n;
  c.m = g.num_edges();
  c.leaf_count = leaf_count(t);
  c.u_size = f.singleton_count();
  c.k = f.big_count();

  auto fail = [&](const std::string& what) {
    throw InvariantViolation("certificate: " + what, {});
  };
  if (c.k < 1) fail("no forest component with three or more vertices");
  if (c.u_size + c.k > n + 1) fail("u_size + k exceeds n + 1");
  c.upper_bound = n - c.u_size - c.k + 1;

  std::size_t big_vertices = 0;
  for (const auto& comp : f.components) {
    if (comp.vertices.size() >= 3) big_vertices += comp.vertices.size();
  }
  if (big_vertices != n - c.u_size) fail("vertices outside U are not covered by big components");

  const auto leaves = c.leaf_count;
  if (f.leaf_count() + 1 > leaves + c.k) fail("forest leaves exceed tree leaves + k - 1");
  if (c.upper_bound < leaves) fail("upper bound below the tree's own leaf count");
  if (n - c.u_size + 2 > 2 * leaves + c.k) fail("n - u_size exceeds 2 leaves + k - 2");
  if (c.upper_bound + 1 > 2 * leaves) fail("upper bound exceeds 2 leaves - 1");
  return c;
}

LemmaReport check_lemmas(const Graph& g, const RankAssignment& r, const RankForest& f,
                         std::size_t max_witnesses) {
  LemmaReport report;
  auto& path = report.checks[0];
  auto& ascent = report.checks[1];
  auto& branch = report.checks[2];
  auto& leaf = report.checks[3];
  auto record = [max_witnesses](LemmaCheck& check, std::vector<VertexId> witness) {
    if (check.witnesses.size() < max_witnesses) {
      check.witnesses.push_back(std::move(witness));
    } else {
      check.truncated = true;
    }
  };
  const auto n = g.num_vertices();
  auto unique = [&](VertexId v) { return f.components[f.component_of[v]].vertices.size() == 1; };

  std::vector<VertexId> lower;
  std::vector<VertexId> higher;
  for (VertexId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    higher.clear();
    lower.clear();
    for (auto w : nbrs) {
      if (r[w] > r[v]) higher.push_back(w);
      if (r[w] < r[v] && unique(w)) lower.push_back(w);
    }

    // A degree-2 middle vertex satisfies the path lemma outright.
    if (unique(v) && nbrs.size() >= 3) {
      ++path.checked;
      for (auto u : lower) {
        for (auto w : higher) record(path, {u, v, w});
      }
    }

    ++ascent.checked;
    if (higher.size() >= 2) record(ascent, {v, higher[0], higher[1]});

    if (f.degree[v] >= 2) {
      branch.checked += nbrs.size();
      for (auto w : higher) record(branch, {v, w});
    }

    if (unique(v)) {
      for (auto w : nbrs) {
        if (f.degree[w] != 1) continue;
        ++leaf.checked;
        if (r[v] <= r[w]) record(leaf, {v, w});
      }
    }
  }
  return report;
}

CertifiedRun certify(const Graph& g, StartPolicy policy) {
  CertifiedRun run;
  run.solution = solve(g, policy);
  run.ranks = assign_ranks(g, run.solution.trace);
  run.forest = build_forest(g, run.solution.tree, run.ranks);
  run.certificate = compute_certificate(g, run.solution.tree, run.forest);
  run.lemmas = check_lemmas(g, run.ranks, run.forest);
  return run;
}

}  // namespace maxleaf
