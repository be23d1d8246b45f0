#include <doctest.h>

#include <random>

#include "maxleaf/generate.hpp"
#include "maxleaf/oracle.hpp"
#include "support/reference.hpp"

using namespace maxleaf;

TEST_CASE("exact optimum on small families") {
  CHECK(max_leaf_exact(make_cycle(5)).opt_leaves == 2);
  CHECK(max_leaf_exact(make_star(6)).opt_leaves == 5);
  const auto grid = max_leaf_exact(make_grid(3, 3));
  CHECK(grid.opt_leaves == 6);  // regression constant from the first enumeration
  CHECK(grid.trees_examined == 192);
  CHECK(grid.complete);
  CHECK(max_leaf_exact(Graph::from_edges(1, {})).opt_leaves == 0);
  const std::vector<Edge> e{{0, 1}};
  CHECK(max_leaf_exact(Graph::from_edges(2, e)).opt_leaves == 2);
}

TEST_CASE("enumeration count matches Cayley's formula") {
  const std::uint64_t expected[] = {0, 1, 1, 3, 16, 125, 1296};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(max_leaf_exact(make_complete(n)).trees_examined == expected[n]);
  }
}

TEST_CASE("witness is the lexicographically smallest optimum") {
  const auto res = max_leaf_exact(make_cycle(4));
  CHECK(res.opt_leaves == 2);
  CHECK(res.witness.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(res.witness.root == 0);
}

TEST_CASE("budget exhaustion") {
  OracleOptions opts;
  opts.budget = 10;
  const auto res = max_leaf_exact(make_complete(5), opts);
  CHECK_FALSE(res.complete);
  CHECK(res.trees_examined == 10);
  CHECK_THROWS_AS(compare(make_complete(5), {}, opts), BudgetExceeded);
  opts.budget = 125;
  CHECK(max_leaf_exact(make_complete(5), opts).complete);
}

TEST_CASE("compare on small families") {
  const auto star = compare(make_star(5));
  CHECK(star.alg_leaves == 4);
  CHECK(star.opt_leaves == 4);
  CHECK(star.ratio == 1.0);
  CHECK(star.bound_ok);
  CHECK(star.certificate_ok == true);

  const auto cycle = compare(make_cycle(5));
  CHECK(cycle.alg_leaves == 2);
  CHECK(cycle.opt_leaves == 2);
  CHECK(cycle.bound_ok);
  CHECK(cycle.certificate_ok == true);
  CHECK(cycle.certificate->upper_bound == 3);

  const auto single = compare(Graph::from_edges(1, {}));
  CHECK(single.bound_ok);
  CHECK_FALSE(single.certificate_ok.has_value());
}

TEST_CASE("oracle properties on random graphs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto g = testing::random_test_graph(rng, 1, 9, 16);
    const auto exact = max_leaf_exact(g);
    REQUIRE(exact.complete);
    CHECK(verify_spanning_tree(g, exact.witness));
    CHECK(leaf_count(exact.witness) == exact.opt_leaves);
    CHECK(max_leaf_via_dominating_sets(g) == exact.opt_leaves);

    OracleOptions pruned;
    pruned.leaf_bound_pruning = true;
    const auto fast = max_leaf_exact(g, pruned);
    CHECK(fast.opt_leaves == exact.opt_leaves);
    CHECK(fast.witness.edges() == exact.witness.edges());
    CHECK(fast.trees_examined <= exact.trees_examined);

    // Adding an edge never lowers the optimum.
    const auto n = g.num_vertices();
    if (g.num_edges() < n * (n - 1) / 2) {
      auto edges = g.edges();
      std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
      while (true) {
        const auto u = pick(rng), v = pick(rng);
        if (u != v && !g.has_edge(u, v)) {
          edges.push_back({u, v});
          break;
        }
      }
      CHECK(max_leaf_exact(Graph::from_edges(n, edges)).opt_leaves >= exact.opt_leaves);
    }
  }
}

TEST_CASE("on trees the optimum is the tree's own leaf count") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = make_random_connected(2 + seed % 12, 1 + seed % 12, seed);
    const auto res = max_leaf_exact(g);
    CHECK(res.trees_examined == 1);
    CHECK(res.opt_leaves == leaf_count(solve(g).tree));
  }
}

TEST_CASE("dominating-set route agrees with enumeration on all graphs up to five vertices") {
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    testing::for_each_connected_labeled_graph(n, [&](const Graph& g) {
      ++graphs;
      CHECK(max_leaf_via_dominating_sets(g) == max_leaf_exact(g).opt_leaves);
    });
  }
  CHECK(graphs == 1 + 1 + 4 + 38 + 728);
}

TEST_CASE("oracles reject disconnected graphs") {
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  const auto g = Graph::from_edges(4, two);
  CHECK_THROWS_AS(max_leaf_exact(g), NotConnectedError);
  CHECK_THROWS_AS(max_leaf_via_dominating_sets(g), NotConnectedError);
}
