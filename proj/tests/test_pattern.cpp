#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hardcore/pattern.hpp"
#include "hardcore/rng.hpp"

using namespace hardcore;
using namespace hardcore::testing;

namespace {

Graph spider(int leg) { return gen_subdivided_claw({leg, leg, leg}); }

}  // namespace

TEST_CASE("find_induced basics") {
  auto claw = gen_subdivided_claw({1, 1, 1});
  auto hit = find_induced(claw, claw);
  REQUIRE(hit.has_value());
  CHECK(embedding_is_induced(claw, claw, *hit));

  CHECK_FALSE(find_induced(gen_cycle(6), claw).has_value());

  auto fork = gen_subdivided_claw({1, 1, 2});
  auto in_block = find_induced(gen_efree_block(1, 1), fork);
  REQUIRE(in_block.has_value());
  CHECK(embedding_is_induced(gen_efree_block(1, 1), fork, *in_block));

  SUBCASE("determinism") {
    auto a = find_induced(gen_efree_block(2, 2), fork);
    auto b = find_induced(gen_efree_block(2, 2), fork);
    REQUIRE(a.has_value());
    CHECK(a->map == b->map);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(find_induced(claw, gen_path(13)), std::invalid_argument);
    CHECK_THROWS_AS(find_induced(claw, Graph(2, {})), std::invalid_argument);  // disconnected
  }
}

TEST_CASE("induced means induced: K4 has claw subgraphs but no induced claw") {
  CHECK(is_subdivided_claw_free(gen_complete(4), {1, 1, 1}));
  CHECK_FALSE(is_subdivided_claw_free(gen_star(3), {1, 1, 1}));
}

TEST_CASE("is_subdivided_claw_free named cases") {
  CHECK(is_subdivided_claw_free(gen_cycle(9), {1, 1, 1}));
  CHECK(is_subdivided_claw_free(gen_skewstar_witness(5), {1, 2, 3}));
  CHECK_FALSE(is_subdivided_claw_free(gen_skewstar_witness(5), {1, 2, 2}));
  CHECK_FALSE(is_subdivided_claw_free(gen_skewstar_witness(2), {1, 2, 2}));
  for (int len : {2, 3, 7, 10})
    CHECK(is_subdivided_claw_free(gen_skewstar_witness(len), {1, 2, 3}));
}

TEST_CASE("the block family is E-free but not fork-free") {
  for (auto [r, c] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {1, 3}, {3, 1}, {2, 3}}) {
    CAPTURE(r);
    CAPTURE(c);
    auto g = gen_efree_block(r, c);
    CHECK(is_subdivided_claw_free(g, {1, 2, 2}));
    CHECK_FALSE(is_subdivided_claw_free(g, {1, 1, 2}));
  }
  // iterating the block produces long induced S_{1,1,t}
  CHECK(find_induced(gen_efree_block(1, 3), gen_subdivided_claw({1, 1, 4})).has_value());
}

TEST_CASE("claw-free fixture corpus is certified claw-free") {
  for (const auto& [name, g] : claw_free_connected_fixtures()) {
    CAPTURE(name);
    CHECK(is_connected(g));
    CHECK(is_subdivided_claw_free(g, {1, 1, 1}));
  }
}

TEST_CASE("verify_claw_to_s11t") {
  CHECK(verify_claw_to_s11t(gen_subdivided_claw({1, 1, 1}), 2) ==
        LemmaVerdict::premise_failed);  // too small
  CHECK(verify_claw_to_s11t(gen_cycle(30), 2) == LemmaVerdict::premise_failed);  // no claw
  // A spider with legs of length 5 has 16 vertices, below vol(3,3)=22: the
  // size premise fails even though claw and conclusion are both present.
  CHECK(vol(3, 3) == 22);
  CHECK(verify_claw_to_s11t(spider(5), 2) == LemmaVerdict::premise_failed);
  // Legs of length 8 give 25 > 22 vertices and the lemma confirms.
  CHECK(verify_claw_to_s11t(spider(8), 2) == LemmaVerdict::confirmed);
  CHECK(verify_claw_to_s11t(spider(16), 3) == LemmaVerdict::confirmed);
}

TEST_CASE("verify_e_to_s12t") {
  CHECK(verify_e_to_s12t(gen_skewstar_witness(5), 3) ==
        LemmaVerdict::premise_failed);  // triangles: not bipartite
  CHECK(verify_e_to_s12t(gen_subdivided_claw({1, 2, 2}), 3) ==
        LemmaVerdict::premise_failed);  // too small
  // 1-subdivision of a connected subcubic graph with a degree-3 vertex:
  // bipartite, contains an induced E, large enough past vol(3,5)=94.
  RngStream rng(404);
  auto base = gen_random_connected_max_degree(40, 3, 0.6, rng);
  auto sub = stretch(base, 1).graph;
  REQUIRE(sub.n() > vol(3, 5));
  CHECK(verify_e_to_s12t(sub, 3) == LemmaVerdict::confirmed);
}

TEST_CASE("fuzz: random connected 5-vertex induced patterns are always found") {
  RngStream rng(2024);
  int tested = 0;
  while (tested < 60) {
    const int n = 8 + static_cast<int>(rng.next_below(18));
    auto g = gen_random_connected_max_degree(n, 5, 0.2, rng);
    VertexSubset pick(g.n());
    pick.set(static_cast<int>(rng.next_below(g.n())));
    for (int grow = 1; grow < 5; ++grow) {
      auto frontier = boundary(g, pick).members();
      if (frontier.empty()) break;
      pick.set(frontier[rng.next_below(static_cast<std::uint32_t>(frontier.size()))]);
    }
    if (pick.count() < 5) continue;
    auto sub = induced_subgraph(g, pick);
    auto hit = find_induced(g, sub.graph);
    REQUIRE_MESSAGE(hit.has_value(), "a genuinely induced pattern must be found");
    CHECK(embedding_is_induced(g, sub.graph, *hit));
    ++tested;
  }
}

TEST_CASE("fuzz: lemma harnesses never report counterexamples") {
  RngStream rng(99);
  int claw_checked = 0, e_checked = 0;
  for (int trial = 0; trial < 200 && (claw_checked < 25 || e_checked < 12); ++trial) {
    auto g = gen_random_connected_max_degree(50 + rng.next_below(20), 3, 0.5, rng);
    auto v1 = verify_claw_to_s11t(g, 2);
    CHECK(v1 != LemmaVerdict::counterexample);
    claw_checked += v1 == LemmaVerdict::confirmed;
    auto sub = stretch(g, 1).graph;
    auto v2 = verify_e_to_s12t(sub, 3);
    CHECK(v2 != LemmaVerdict::counterexample);
    e_checked += v2 == LemmaVerdict::confirmed;
  }
  CHECK(claw_checked >= 25);
  CHECK(e_checked >= 12);
}
