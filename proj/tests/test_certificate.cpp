#include <doctest.h>

#include <map>
#include <random>

#include "maxleaf/certificate.hpp"
#include "maxleaf/generate.hpp"
#include "support/reference.hpp"

using namespace maxleaf;

TEST_CASE("ranks on small families") {
  const auto star = make_star(5);
  const auto rs = assign_ranks(star, solve(star).trace);
  CHECK(rs.rank == std::vector<Rank>(5, 1));

  const auto k4 = make_complete(4);
  CHECK(assign_ranks(k4, solve(k4).trace).rank == std::vector<Rank>(4, 1));

  // Trace (0,W2,[1,4]) (4,W0,[3]) (3,W1,[2]).
  const auto c5 = make_cycle(5);
  const auto rc = assign_ranks(c5, solve(c5).trace);
  CHECK(rc.rank == std::vector<Rank>{1, 1, 3, 2, 1});
}

TEST_CASE("forest and certificate for the cycle of five") {
  const auto g = make_cycle(5);
  const auto sol = solve(g);
  const auto r = assign_ranks(g, sol.trace);
  const auto f = build_forest(g, sol.tree, r);
  REQUIRE(f.components.size() == 3);
  CHECK(f.components[0].vertices == std::vector<VertexId>{0, 1, 4});
  CHECK(f.components[0].leaves == std::vector<VertexId>{1, 4});
  CHECK(f.components[0].degree_two == 1);
  CHECK(f.components[1].vertices == std::vector<VertexId>{3});
  CHECK(f.components[2].vertices == std::vector<VertexId>{2});
  CHECK(f.singleton_count() == 2);
  CHECK(f.big_count() == 1);

  const auto c = compute_certificate(g, sol.tree, f);
  CHECK(c.u_size == 2);
  CHECK(c.k == 1);
  CHECK(c.upper_bound == 3);
  CHECK(c.leaf_count == 2);
  CHECK(c.to_text() == "n=5\nm=5\nleaves=2\nu_size=2\nk=1\nupper_bound=3\nratio_bound=1.5000\n");

  const auto lemmas = check_lemmas(g, r, f);
  CHECK(lemmas.pass());
  // Vertex 4 (rank 1) has neighbors 0 (rank 1) and 3 (rank 2): one higher.
  CHECK(lemmas.checks[1].checked == 5);
}

TEST_CASE("certificates for star and complete graphs") {
  const auto star = certify(make_star(5));
  CHECK(star.certificate == Certificate{5, 4, 4, 0, 1, 5});
  CHECK(star.lemmas.pass());
  const auto k4 = certify(make_complete(4));
  CHECK(k4.certificate == Certificate{4, 6, 3, 0, 1, 4});
}

TEST_CASE("degenerate forests and unsupported certificate sizes") {
  const auto one = Graph::from_edges(1, {});
  const auto sol = solve(one);
  const auto r = assign_ranks(one, sol.trace);
  const auto f = build_forest(one, sol.tree, r);
  CHECK(f.singleton_count() == 1);
  CHECK(f.big_count() == 0);
  CHECK_THROWS_AS(compute_certificate(one, sol.tree, f), UnsupportedSizeError);

  const std::vector<Edge> e{{0, 1}};
  CHECK_THROWS_AS(certify(Graph::from_edges(2, e)), UnsupportedSizeError);
}

TEST_CASE("assign_ranks rejects inconsistent traces") {
  const auto g = make_cycle(5);
  ExpansionTrace bad_center(0);
  bad_center.begin(2, StepCase::W2);
  bad_center.add(1);
  bad_center.add(3);
  CHECK_THROWS_AS(assign_ranks(g, bad_center), TraceError);

  ExpansionTrace non_edge(0);
  non_edge.begin(0, StepCase::W2);
  non_edge.add(1);
  non_edge.add(2);
  CHECK_THROWS_AS(assign_ranks(g, non_edge), TraceError);

  ExpansionTrace short_w2(0);
  short_w2.begin(0, StepCase::W2);
  short_w2.add(1);
  CHECK_THROWS_AS(assign_ranks(g, short_w2), TraceError);

  ExpansionTrace partial(0);
  partial.begin(0, StepCase::W2);
  partial.add(1);
  partial.add(4);
  CHECK_THROWS_AS(assign_ranks(g, partial), TraceError);
}

TEST_CASE("build_forest reports broken rank structure") {
  // Path 0-1-2 rooted at 1 with all ranks 1 except a forged two-vertex class.
  const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
  const auto g = Graph::from_edges(4, path);
  const auto t = SpanningTree::from_edges(4, path, 1);
  CHECK_THROWS_AS(build_forest(g, t, RankAssignment{{1, 1, 2, 2}}), InvariantViolation);
  // Same rank on two vertices not joined in the forest.
  CHECK_THROWS_AS(build_forest(g, t, RankAssignment{{1, 2, 1, 3}}), InvariantViolation);
}

TEST_CASE("check_lemmas flags forged ranks") {
  // Star center 0 with leaves 1..3; give two leaves higher ranks than the
  // center so the ascent and branch lemmas break.
  const auto g = make_star(4);
  const auto t = solve(g).tree;
  RankAssignment r{{1, 2, 3, 4}};
  RankForest f;
  f.degree = {0, 0, 0, 0};
  f.component_of = {0, 1, 2, 3};
  for (Rank k = 1; k <= 4; ++k) f.components.push_back({k, {k - 1}, {}, 0});
  const auto report = check_lemmas(g, r, f);
  CHECK_FALSE(report.pass());
  CHECK_FALSE(report.checks[1].pass());
  CHECK(report.checks[1].witnesses[0] == std::vector<VertexId>{0, 1, 2});
  // All unique, center has degree 3: 0 (rank 1) has no lower neighbor, so
  // the path lemma is vacuous.
  CHECK(report.checks[0].pass());

  const auto k4 = make_complete(4);
  RankAssignment r2{{1, 2, 3, 4}};
  const auto report2 = check_lemmas(k4, r2, f);
  // Vertex 1 has a lower unique neighbor 0 and higher neighbors 2, 3.
  CHECK_FALSE(report2.checks[0].pass());
  CHECK(report2.checks[0].witnesses[0] == std::vector<VertexId>{0, 1, 2});

  RankForest leafy = f;
  leafy.degree = {1, 1, 0, 0};
  leafy.component_of = {0, 0, 1, 2};
  leafy.components = {{1, {0, 1}, {0, 1}, 0}, {2, {2}, {}, 0}, {3, {3}, {}, 0}};
  const auto report3 = check_lemmas(make_complete(4), RankAssignment{{1, 1, 2, 3}}, leafy);
  // Edges 2-? from unique 2 (rank 2) to leaves 0, 1 are fine; unique 3 too.
  CHECK(report3.checks[3].pass());
  const auto report4 = check_lemmas(make_complete(4), RankAssignment{{3, 3, 1, 2}}, leafy);
  CHECK_FALSE(report4.checks[3].pass());
}

TEST_CASE("property: analysis invariants on random runs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto g = testing::random_test_graph(rng, 3, 64, 160);
    for (auto policy : {StartPolicy::first_eligible(), StartPolicy::max_degree()}) {
      const auto run = certify(g, policy);
      const auto& r = run.ranks;
      const auto& t = run.solution.tree;
      CHECK(run.lemmas.pass());
      CHECK(r[t.root] == 1);

      // Tree edges never decrease rank; strictly increase exactly on W1/W0 additions.
      std::vector<StepCase> added_by(g.num_vertices(), StepCase::W2);
      for (std::size_t s = 0; s < run.solution.trace.size(); ++s) {
        const auto step = run.solution.trace[s];
        for (auto v : step.added) added_by[v] = step.kind;
      }
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (v == t.root) continue;
        const auto p = t.parent[v];
        CHECK(r[p] <= r[v]);
        CHECK((r[p] < r[v]) == (added_by[v] != StepCase::W2));
      }

      // Unique ranks counted directly from the rank vector.
      std::map<Rank, std::size_t> count;
      for (auto x : r.rank) ++count[x];
      std::size_t unique = 0;
      for (const auto& [rank, c] : count) unique += c == 1 ? 1 : 0;
      CHECK(run.certificate.u_size == unique);
      CHECK(run.certificate.upper_bound + 1 <= 2 * run.certificate.leaf_count);
      CHECK(run.certificate.leaf_count <= run.certificate.upper_bound);
    }
  }
}
