#include <doctest.h>

#include <random>

#include "maxleaf/generate.hpp"
#include "maxleaf/io.hpp"
#include "maxleaf/tree.hpp"
#include "support/reference.hpp"

using namespace maxleaf;
using testing::RefStep;

TEST_CASE("pick_start") {
  const auto path = parse_graph("3 2\n0 1\n1 2\n", Format::edgelist);
  CHECK(pick_start(path, StartPolicy::first_eligible()) == 1);
  CHECK(pick_start(make_star(5), StartPolicy::max_degree()) == 0);
  CHECK(pick_start(make_grid(3, 3), StartPolicy::max_degree()) == 4);
  CHECK(pick_start(make_grid(3, 3), StartPolicy::first_eligible()) == 0);
  CHECK(pick_start(make_grid(3, 3), StartPolicy::at(7)) == 7);
  CHECK(pick_start(Graph::from_edges(1, {}), StartPolicy::max_degree()) == 0);
  const std::vector<Edge> one{{0, 1}};
  CHECK(pick_start(Graph::from_edges(2, one), StartPolicy::first_eligible()) == 0);
  CHECK_THROWS_AS(pick_start(path, StartPolicy::at(0)), InvalidStartError);
  CHECK_THROWS_AS(pick_start(path, StartPolicy::at(3)), InvalidStartError);
}

TEST_CASE("start policy parsing") {
  CHECK(StartPolicy::parse("first").kind == StartPolicy::Kind::first_eligible);
  CHECK(StartPolicy::parse("maxdeg").kind == StartPolicy::Kind::max_degree);
  const auto p = StartPolicy::parse("vertex:12");
  CHECK(p.kind == StartPolicy::Kind::explicit_vertex);
  CHECK(p.vertex == 12);
  CHECK_THROWS_AS(StartPolicy::parse("vertex:"), std::invalid_argument);
  CHECK_THROWS_AS(StartPolicy::parse("vertex:1x"), std::invalid_argument);
  CHECK_THROWS_AS(StartPolicy::parse("random"), std::invalid_argument);
}

TEST_CASE("star and complete graphs take one expansion") {
  const auto star = solve(make_star(5));
  CHECK(star.tree.root == 0);
  REQUIRE(star.trace.size() == 1);
  CHECK(star.trace[0].kind == StepCase::W2);
  CHECK(star.trace[0].added.size() == 4);
  CHECK(leaf_count(star.tree) == 4);

  const auto k4 = solve(make_complete(4));
  REQUIRE(k4.trace.size() == 1);
  CHECK(k4.trace[0].center == 0);
  CHECK(leaf_count(k4.tree) == 3);
}

TEST_CASE("cycle of five grows a path from the latest W0 vertex") {
  // Hand replay: 0 expands to {1, 4}; both have one outside neighbor whose
  // onward count is 1, so both end in W0; 4 joined last and is expanded,
  // adding 3; then 3's outside neighbor 2 has no onward neighbor, so 3 is
  // expanded straight from W1.
  const auto sol = solve(make_cycle(5), StartPolicy::at(0));
  const std::vector<RefStep> expected{
      {0, StepCase::W2, {1, 4}}, {4, StepCase::W0, {3}}, {3, StepCase::W1, {2}}};
  CHECK(testing::as_ref_steps(sol.trace) == expected);
  CHECK(sol.tree.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {2, 3}, {3, 4}});
  CHECK(leaf_count(sol.tree) == 2);
  CHECK(sol.trace.debug_lines() ==
        "step=1 case=W2 center=0 added=1,4\n"
        "step=2 case=W0 center=4 added=3\n"
        "step=3 case=W1 center=3 added=2\n");
}

TEST_CASE("degenerate sizes") {
  const auto one = solve(Graph::from_edges(1, {}));
  CHECK(one.trace.empty());
  CHECK(leaf_count(one.tree) == 0);
  CHECK(verify_spanning_tree(Graph::from_edges(1, {}), one.tree));

  const std::vector<Edge> e{{0, 1}};
  const auto g2 = Graph::from_edges(2, e);
  const auto two = solve(g2);
  CHECK(leaf_count(two.tree) == 2);
  REQUIRE(two.trace.size() == 1);
  CHECK(two.trace[0].kind == StepCase::W1);
  CHECK(verify_spanning_tree(g2, two.tree));
}

TEST_CASE("solve rejects bad inputs") {
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(solve(Graph::from_edges(4, two)), NotConnectedError);
  const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
  CHECK_THROWS_AS(solve(Graph::from_edges(4, path), StartPolicy::at(0)), InvalidStartError);
}

TEST_CASE("verify_spanning_tree reports defects") {
  const auto g = make_cycle(5);
  auto good = solve(g).tree;
  CHECK(verify_spanning_tree(g, good));

  auto non_edge = good;
  non_edge.parent[2] = 0;  // 0-2 is not a cycle edge
  CHECK(verify_spanning_tree(g, non_edge).defect == TreeDefect::non_edge);

  auto missing = good;
  missing.parent.pop_back();
  CHECK(verify_spanning_tree(g, missing).defect == TreeDefect::wrong_vertex_count);

  auto orphan = good;
  orphan.parent[2] = kNoVertex;
  CHECK(verify_spanning_tree(g, orphan).defect == TreeDefect::missing_vertex);

  // 1 -> 2 -> 1 loop detached from the root.
  const auto full = make_complete(4);
  auto looped = SpanningTree::from_parents(0, {kNoVertex, 2, 1, 0});
  CHECK(verify_spanning_tree(full, looped).defect == TreeDefect::cycle);

  auto rooted = good;
  rooted.parent[rooted.root] = 1;
  CHECK(verify_spanning_tree(g, rooted).defect == TreeDefect::root_has_parent);
}

TEST_CASE("property: solver matches the scanning reference and selection rule") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto g = testing::random_test_graph(rng, 1, 40, 120);
    for (auto policy : {StartPolicy::first_eligible(), StartPolicy::max_degree()}) {
      const auto sol = solve(g, policy);
      REQUIRE(verify_spanning_tree(g, sol.tree));
      CHECK(sol.tree.root == sol.trace.start());
      CHECK(testing::as_ref_steps(sol.trace) == testing::reference_steps(g, sol.trace.start()));
      const auto rule = testing::check_selection_rule(g, sol.trace);
      CHECK_MESSAGE(rule.empty(), rule);

      // Every vertex joins once and its parent is the step's center.
      std::vector<int> seen(g.num_vertices(), 0);
      seen[sol.trace.start()] = 1;
      for (std::size_t s = 0; s < sol.trace.size(); ++s) {
        const auto step = sol.trace[s];
        CHECK((step.kind == StepCase::W2 ? step.added.size() >= 2 : step.added.size() == 1));
        for (auto v : step.added) {
          ++seen[v];
          CHECK(sol.tree.parent[v] == step.center);
        }
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
      if (g.num_vertices() >= 3) {
        CHECK(sol.trace[0].kind == StepCase::W2);
        CHECK(sol.trace[0].center == sol.trace.start());
      }

      // Work stays linear.
      CHECK(sol.touches <= 10 * (g.num_vertices() + g.num_edges()));
      CHECK(solve(g, policy).trace == sol.trace);
    }
  }
}

TEST_CASE("property: consecutive W0 steps follow the grown path") {
  // After a W0 step adds v, the next W0 step (with nothing in between)
  // expands v unless v ended as a leaf.
  std::mt19937_64 rng(99);
  std::size_t pairs = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = testing::random_test_graph(rng, 3, 30, 45);
    const auto sol = solve(g);
    std::vector<int> tree_degree(g.num_vertices(), 0);
    for (const auto& e : sol.tree.edges()) {
      ++tree_degree[e.u];
      ++tree_degree[e.v];
    }
    for (std::size_t s = 1; s < sol.trace.size(); ++s) {
      const auto prev = sol.trace[s - 1];
      const auto cur = sol.trace[s];
      if (prev.kind != StepCase::W0 || cur.kind != StepCase::W0) continue;
      ++pairs;
      const auto child = prev.added[0];
      CHECK((cur.center == child || tree_degree[child] == 1));
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("leaf_count and tree construction helpers") {
  const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  const auto t = SpanningTree::from_edges(5, path, 2);
  CHECK(leaf_count(t) == 2);
  CHECK(t.leaves == std::vector<VertexId>{0, 4});
  CHECK(t.parent_of(2) == std::nullopt);
  CHECK(t.parent_of(0) == 1u);
  CHECK(t.edges() == path);
}
