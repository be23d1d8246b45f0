#include "maxleaf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace maxleaf {

namespace {

/// Union-find with undo; union by size, no path compression.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const auto b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<VertexId> history_;
};

class Enumerator {
 public:
  Enumerator(const Graph& g, OracleOptions options)
      : n_(g.num_vertices()),
        edges_(g.edges()),
        options_(options),
        dsu_(n_),
        degree_(n_, 0),
        scratch_(n_) {}

  OracleResult run() {
    descend(0, 0);
    OracleResult out;
    out.opt_leaves = best_leaves_;
    out.trees_examined = examined_;
    out.complete = !stopped_;
    out.witness = SpanningTree::from_edges(n_, best_edges_, 0);
    return out;
  }

 private:
  void descend(std::size_t i, std::size_t included) {
    if (stopped_) return;
    if (included + 1 == n_) {
      record();
      return;
    }
    if (i == edges_.size()) return;
    if (options_.leaf_bound_pruning && have_best_ && n_ - internal_ <= best_leaves_) return;

    const auto [u, v] = edges_[i];
    if (dsu_.unite(u, v)) {
      bump(u, +1);
      bump(v, +1);
      chosen_.push_back(edges_[i]);
      descend(i + 1, included + 1);
      chosen_.pop_back();
      bump(u, -1);
      bump(v, -1);
      dsu_.undo();
    }
    if (connectable_without(i)) descend(i + 1, included);
  }

  void bump(VertexId v, int delta) {
    if (delta > 0 && ++degree_[v] == 2) ++internal_;
    if (delta < 0 && degree_[v]-- == 2) --internal_;
  }

  /// Whether the chosen edges plus edges after index i still connect G.
  bool connectable_without(std::size_t i) {
    for (VertexId v = 0; v < n_; ++v) scratch_[v] = dsu_.find(v);
    RollbackDsu tmp(n_);
    std::size_t components = 0;
    for (VertexId v = 0; v < n_; ++v) components += scratch_[v] == v ? 1 : 0;
    for (auto j = i + 1; j < edges_.size() && components > 1; ++j) {
      if (tmp.unite(scratch_[edges_[j].u], scratch_[edges_[j].v])) --components;
    }
    return components == 1;
  }

  void record() {
    if (examined_ == options_.budget) {
      stopped_ = true;
      return;
    }
    ++examined_;
    const auto leaves = static_cast<std::size_t>(std::count(degree_.begin(), degree_.end(), 1u));
    if (!have_best_ || leaves > best_leaves_) {
      have_best_ = true;
      best_leaves_ = leaves;
      best_edges_ = chosen_;
    }
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  OracleOptions options_;
  RollbackDsu dsu_;
  std::vector<std::uint32_t> degree_;
  std::vector<VertexId> scratch_;
  std::vector<Edge> chosen_;
  std::vector<Edge> best_edges_;
  std::size_t internal_ = 0;
  std::size_t best_leaves_ = 0;
  bool have_best_ = false;
  bool stopped_ = false;
  std::uint64_t examined_ = 0;
};

}  // namespace

OracleResult max_leaf_exact(const Graph& g, OracleOptions options) {
  if (!is_connected(g)) throw NotConnectedError();
  return Enumerator(g, options).run();
}

std::size_t max_leaf_via_dominating_sets(const Graph& g) {
  const auto n = g.num_vertices();
  if (!is_connected(g)) throw NotConnectedError();
  if (n > 24) throw std::invalid_argument("dominating-set oracle supports n <= 24");
  if (n <= 2) return n == 1 ? 0 : 2;

  std::vector<std::uint32_t> open(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (auto w : g.neighbors(v)) open[v] |= 1u << w;
  }
  const std::uint32_t all = (1u << n) - 1;

  auto dominating = [&](std::uint32_t set) {
    std::uint32_t covered = set;
    for (auto s = set; s; s &= s - 1) covered |= open[std::countr_zero(s)];
    return covered == all;
  };
  auto connected = [&](std::uint32_t set) {
    std::uint32_t reached = set & (~set + 1);
    std::uint32_t frontier = reached;
    while (frontier) {
      std::uint32_t next = 0;
      for (auto s = frontier; s; s &= s - 1) next |= open[std::countr_zero(s)];
      frontier = next & set & ~reached;
      reached |= frontier;
    }
    return reached == set;
  };

  for (std::size_t size = 1; size <= n; ++size) {
    // Gosper's hack over all subsets of the given size.
    std::uint32_t set = (1u << size) - 1;
    while (set <= all) {
      if (dominating(set) && connected(set)) return n - size;
      const std::uint32_t c = set & (~set + 1);
      const std::uint32_t r = set + c;
      if (r == 0) break;
      set = (((r ^ set) >> 2) / c) | r;
    }
  }
  return 0;  // unreachable for connected graphs
}

Comparison compare(const Graph& g, StartPolicy policy, OracleOptions options) {
  const auto n = g.num_vertices();
  Comparison out;
  std::optional<CertifiedRun> run;
  Solution solution;
  if (n >= 3) {
    try {
      run = certify(g, policy);
      solution = run->solution;
    } catch (const InvariantViolation&) {
      out.certificate_ok = false;
      solution = solve(g, policy);
    }
  } else {
    solution = solve(g, policy);
  }

  const auto oracle = max_leaf_exact(g, options);
  if (!oracle.complete) throw BudgetExceeded(oracle);

  out.alg_leaves = leaf_count(solution.tree);
  out.opt_leaves = oracle.opt_leaves;
  out.ratio = out.alg_leaves == 0 ? 1.0 : static_cast<double>(out.opt_leaves) / out.alg_leaves;
  out.bound_ok = n == 1 ? out.opt_leaves == out.alg_leaves
                        : out.opt_leaves + 1 <= 2 * out.alg_leaves;
  if (run) {
    out.certificate = run->certificate;
    out.certificate_ok = run->lemmas.pass() && out.opt_leaves <= run->certificate.upper_bound;
  }
  return out;
}

}  // namespace maxleaf
