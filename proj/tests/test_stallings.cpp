#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace sepcert;
using namespace fixtures;

TEST_CASE("build_gamma examples") {
  SUBCASE("trivial subgroup, one separator") {
    Gamma g = build_gamma(problem(2, z2(), {}, {{X1}}));
    CHECK(g.graph.vertex_count() == 2);
    CHECK(g.graph.edge_pair_count() == 1);
    CHECK(g.separator_endpoints[0] != g.graph.base());
  }
  SUBCASE("<y1> in Z/2 is Cay(G, G)") {
    Gamma g = build_gamma(problem(2, z2(), {{Y1}}));
    CHECK(g.graph.vertex_count() == 1);
    CHECK(trace(g.graph, 0, {Y1}).closed());
    // Y1 Y1^-1 wedge: needs the coset identification, not just folding
    Gamma h = build_gamma(problem(2, z2(), {{Y1, Y1}, {Y1}}));
    CHECK(h.graph.vertex_count() == 1);
  }
  SUBCASE("coset identification merges a folded Y-path") {
    // Y1 Y1 closes in Z/2 only through the group relation Y1 = Y1^-1
    Gamma g = build_gamma(problem(2, z2(), {}, {{Y1, Y1}}));
    CHECK(g.graph.vertex_count() == 2);
    CHECK(g.separator_endpoints[0] == g.graph.base());
    CHECK(g.rounds >= 1);
  }
  SUBCASE("figure 2") {
    Gamma g = build_gamma(figure2_problem());
    CHECK(g.graph.connected());
    CHECK(g.graph.folded());
    CHECK(g.separator_endpoints[0] != g.graph.base());
    // base, a, b from Y1 X1^-1 Y1; c from X1 X2 X1^-1; e from Y2
    CHECK(g.graph.vertex_count() == 5);
    CHECK(g.graph.edge_pair_count() == 6);
  }
  SUBCASE("undeclared generators are rejected") {
    CHECK_THROWS_AS(build_gamma(problem(2, z2(), {{X3}})), Error);
    CHECK_THROWS_AS(build_gamma(problem(2, z2(), {{Y2}})), Error);
  }
}

TEST_CASE("membership examples") {
  ProblemSpec sq = problem(2, z2(), {{X1, X1}});
  CHECK(membership(sq, {X1, X1}));
  CHECK_FALSE(membership(sq, {X1}));
  CHECK_FALSE(membership(figure2_problem(), {Y2}));
  CHECK(membership(figure2_problem(), {Y1, inv(X1), Y1, X1, X2, inv(X1)}));
  CHECK(membership(problem(2, s3(), {{Y1}}), {Y1, Y1, Y1, Y1}));
}

TEST_CASE("Gamma invariants on fixtures") {
  for (const Fixture& f : membership_fixtures()) {
    CAPTURE(f.name);
    Gamma g = build_gamma(f.spec);
    for (const Word& h : f.spec.subgroup_words) CHECK(trace(g.graph, g.graph.base(), h).closed());
    BasedQuotient again = based_quotient(g.graph, f.spec.finite);
    CHECK(again.graph == g.graph);
    CHECK(again.rounds == 0);
    for (const Component& c : components(g.graph, Factor::Y)) {
      YComponentCover e = embed_y_component(f.spec.finite, c.graph);
      CHECK(is_embedding(c.graph, e.cover.graph, e.embedding));
    }
  }
}

TEST_CASE("membership agrees with the exhaustive oracle up to length 4") {
  for (const Fixture& f : membership_fixtures()) {
    CAPTURE(f.name);
    MembershipOracle truth(f, 10);
    SubgroupGraph h(f.spec);
    for (const auto& [nf, w] : oracle::ball(f.spec.free.rank, f.spec.finite, 4)) {
      CAPTURE(to_string(w));
      CHECK(h.contains(w) == truth.contains(w));
    }
  }
}

TEST_CASE("membership via a cached graph matches a fresh build") {
  ProblemSpec spec = figure2_problem();
  SubgroupGraph cached(spec);
  for (const auto& [nf, w] : oracle::ball(2, spec.finite, 3)) CHECK(cached.contains(w) == membership(spec, w));
}

TEST_CASE("hypothesis_check") {
  CHECK(hypothesis_check(build_gamma(problem(2, z2(), {{Y1}})).graph, 2).kind ==
        HypothesisVerdict::Kind::Hypothesis1);
  HypothesisVerdict sq = hypothesis_check(build_gamma(problem(2, z2(), {{X1, X1}})).graph, 2);
  CHECK(sq.kind == HypothesisVerdict::Kind::Hypothesis2);
  CHECK(sq.witness == std::size_t{0});

  ProblemSpec kernel = kernel_problem();
  CHECK(kernel.subgroup_words.size() == 5);
  CHECK(hypothesis_check(build_gamma(kernel).graph, 2).kind == HypothesisVerdict::Kind::NotApplicable);

  CHECK(hypothesis_check(build_gamma(figure2_problem()).graph, 2).kind == HypothesisVerdict::Kind::Hypothesis2);
  CHECK(hypothesis_check(build_gamma(problem(2, z2(), {})).graph, 2).kind == HypothesisVerdict::Kind::Hypothesis1);

  // H containing all of F_2: the bouquet is a cover
  ProblemSpec whole = problem(2, z2(), {{X1}, {X2}});
  CHECK(hypothesis_check(build_gamma(whole).graph, 2).kind == HypothesisVerdict::Kind::NotApplicable);
}
