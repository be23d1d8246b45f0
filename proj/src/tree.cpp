#include "maxleaf/tree.hpp"

#include <algorithm>
#include <charconv>

namespace maxleaf {

// ---------------------------------------------------------------------------
// SpanningTree

SpanningTree SpanningTree::from_parents(VertexId root, std::vector<VertexId> parent) {
  SpanningTree t;
  t.root = root;
  t.parent = std::move(parent);
  std::vector<std::uint32_t> deg(t.parent.size(), 0);
  for (VertexId v = 0; v < t.parent.size(); ++v) {
    const auto p = t.parent[v];
    if (p == kNoVertex || p >= t.parent.size()) continue;
    ++deg[v];
    ++deg[p];
  }
  for (VertexId v = 0; v < deg.size(); ++v) {
    if (deg[v] == 1) t.leaves.push_back(v);
  }
  return t;
}

SpanningTree SpanningTree::from_edges(std::size_t n, std::span<const Edge> edges, VertexId root) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        stack.push_back(v);
      }
    }
  }
  return from_parents(root, std::move(parent));
}

std::vector<Edge> SpanningTree::edges() const {
  std::vector<Edge> out;
  out.reserve(parent.size());
  for (VertexId v = 0; v < parent.size(); ++v) {
    if (parent[v] != kNoVertex) out.push_back({std::min(v, parent[v]), std::max(v, parent[v])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t leaf_count(const SpanningTree& t) { return t.leaves.size(); }

std::string_view to_string(TreeDefect d) {
  switch (d) {
    case TreeDefect::none: return "none";
    case TreeDefect::wrong_vertex_count: return "wrong_vertex_count";
    case TreeDefect::root_has_parent: return "root_has_parent";
    case TreeDefect::parent_out_of_range: return "parent_out_of_range";
    case TreeDefect::missing_vertex: return "missing_vertex";
    case TreeDefect::non_edge: return "non_edge";
    case TreeDefect::cycle: return "cycle";
  }
  return "unknown";
}

TreeCheck verify_spanning_tree(const Graph& g, const SpanningTree& t) {
  const auto n = g.num_vertices();
  if (t.parent.size() != n || t.root >= n) return {TreeDefect::wrong_vertex_count};
  if (t.parent[t.root] != kNoVertex) return {TreeDefect::root_has_parent, t.root};
  for (VertexId v = 0; v < n; ++v) {
    if (v == t.root) continue;
    const auto p = t.parent[v];
    if (p == kNoVertex) return {TreeDefect::missing_vertex, v};
    if (p >= n) return {TreeDefect::parent_out_of_range, v};
    if (!g.has_edge(v, p)) return {TreeDefect::non_edge, v};
  }
  // Every vertex must reach the root; state 1 = on current walk, 2 = reaches root.
  std::vector<char> state(n, 0);
  state[t.root] = 2;
  std::vector<VertexId> walk;
  for (VertexId v = 0; v < n; ++v) {
    walk.clear();
    auto x = v;
    while (state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = t.parent[x];
    }
    if (state[x] == 1) return {TreeDefect::cycle, x};
    for (auto w : walk) state[w] = 2;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Trace and policy

std::string_view to_string(StepCase c) {
  switch (c) {
    case StepCase::W2: return "W2";
    case StepCase::W1: return "W1";
    case StepCase::W0: return "W0";
  }
  return "?";
}

std::string ExpansionTrace::debug_lines() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto step = (*this)[i];
    out += "step=" + std::to_string(i + 1) + " case=" + std::string(to_string(step.kind)) +
           " center=" + std::to_string(step.center) + " added=";
    for (std::size_t j = 0; j < step.added.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(step.added[j]);
    }
    out += '\n';
  }
  return out;
}

StartPolicy StartPolicy::parse(std::string_view text) {
  if (text == "first") return first_eligible();
  if (text == "maxdeg") return max_degree();
  constexpr std::string_view prefix = "vertex:";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    VertexId v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) return at(v);
  }
  throw std::invalid_argument("unknown start policy '" + std::string(text) +
                              "' (expected first, maxdeg, or vertex:<id>)");
}

VertexId pick_start(const Graph& g, StartPolicy policy) {
  const auto n = g.num_vertices();
  if (policy.kind == StartPolicy::Kind::explicit_vertex && policy.vertex >= n) {
    throw InvalidStartError("start vertex " + std::to_string(policy.vertex) +
                            " out of range (n=" + std::to_string(n) + ")");
  }
  if (n <= 2) return 0;

  switch (policy.kind) {
    case StartPolicy::Kind::first_eligible:
      for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) >= 2) return v;
      }
      break;
    case StartPolicy::Kind::max_degree: {
      VertexId best = 0;
      for (VertexId v = 1; v < n; ++v) {
        if (g.degree(v) > g.degree(best)) best = v;
      }
      if (g.degree(best) >= 2) return best;
      break;
    }
    case StartPolicy::Kind::explicit_vertex:
      if (g.degree(policy.vertex) >= 2) return policy.vertex;
      throw InvalidStartError("start vertex " + std::to_string(policy.vertex) + " has degree " +
                              std::to_string(g.degree(policy.vertex)) + " (need >= 2)");
  }
  // Only reachable for disconnected inputs such as a perfect matching.
  throw NotConnectedError();
}

// ---------------------------------------------------------------------------
// Scheduler

namespace {

class Scheduler {
 public:
  explicit Scheduler(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        unspanned_(n_),
        cursor_(n_, 0),
        in_tree_(n_, 0),
        parent_(n_, kNoVertex) {
    for (VertexId v = 0; v < n_; ++v) unspanned_[v] = static_cast<std::uint32_t>(g.degree(v));
    w2_.reserve(n_);
    w1_.reserve(n_);
  }

  Solution run(VertexId start) {
    ExpansionTrace trace(start);
    trace.reserve(n_);
    trace_ = &trace;

    join(start, kNoVertex);
    w2_.clear();  // the start vertex is expanded directly, not queued
    expand(start, g_.degree(start) >= 2 ? StepCase::W2 : StepCase::W1);

    while (spanned_ < n_) {
      if (w2_head_ < w2_.size()) {
        const auto u = w2_[w2_head_++];
        const auto count = unspanned_[u];
        if (count == 1) {
          w1_.push_back(u);
        } else if (count >= 2) {
          expand(u, StepCase::W2);
        }
      } else if (w1_head_ < w1_.size()) {
        const auto u = w1_[w1_head_++];
        if (unspanned_[u] == 0) continue;
        // unspanned_[v] already excludes u, which is in the tree.
        const auto v = first_unspanned(u);
        if (unspanned_[v] == 1) {
          w0_.push_back(u);
        } else {
          expand(u, StepCase::W1);
        }
      } else if (!w0_.empty()) {
        const auto u = w0_.back();
        w0_.pop_back();
        expand(u, StepCase::W0);
      } else {
        break;  // unreachable for connected inputs
      }
    }

    Solution out;
    out.tree = SpanningTree::from_parents(start, std::move(parent_));
    out.trace = std::move(trace);
    out.touches = touches_;
    return out;
  }

 private:
  void join(VertexId v, VertexId p) {
    in_tree_[v] = 1;
    parent_[v] = p;
    ++spanned_;
    const auto nbrs = g_.neighbors(v);
    touches_ += nbrs.size();
    for (auto w : nbrs) --unspanned_[w];
    w2_.push_back(v);
  }

  /// Requires unspanned_[u] >= 1. The cursor only moves forward, so all
  /// scans of u's adjacency together cost O(deg u).
  VertexId first_unspanned(VertexId u) {
    const auto nbrs = g_.neighbors(u);
    auto& i = cursor_[u];
    while (in_tree_[nbrs[i]]) {
      ++i;
      ++touches_;
    }
    ++touches_;
    return nbrs[i];
  }

  void expand(VertexId u, StepCase kind) {
    if (unspanned_[u] == 0) return;
    trace_->begin(u, kind);
    const auto nbrs = g_.neighbors(u);
    for (auto i = cursor_[u]; i < nbrs.size(); ++i) {
      ++touches_;
      const auto v = nbrs[i];
      if (!in_tree_[v]) {
        join(v, u);
        trace_->add(v);
      }
    }
    cursor_[u] = nbrs.size();
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> unspanned_;
  std::vector<std::size_t> cursor_;
  std::vector<char> in_tree_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> w2_;
  std::vector<VertexId> w1_;
  std::vector<VertexId> w0_;
  std::size_t w2_head_ = 0;
  std::size_t w1_head_ = 0;
  std::size_t spanned_ = 0;
  std::uint64_t touches_ = 0;
  ExpansionTrace* trace_ = nullptr;
};

}  // namespace

Solution solve(const Graph& g, StartPolicy policy) {
  if (!is_connected(g)) throw NotConnectedError();
  const auto start = pick_start(g, policy);
  return Scheduler(g).run(start);
}

}  // namespace maxleaf
