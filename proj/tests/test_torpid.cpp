#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hardcore/torpid.hpp"
#include "oracles.hpp"

using namespace hardcore;
using namespace hardcore::testing;

namespace {

Graph k33() {
  return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                   {2, 3}, {2, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("path transfer table") {
  SUBCASE("ell=1 enumerated by hand") {
    auto p1 = path_transfer(1, Rational(1));
    CHECK(p1[0][0] == 3);
    CHECK(p1[0][1] == 2);
    CHECK(p1[1][0] == 2);
    CHECK(p1[1][1] == 1);
    auto p2 = path_transfer(1, Rational(2));
    CHECK(p2[0][0] == 5);
    CHECK(p2[1][0] == 3);
    CHECK(p2[1][1] == 1);
  }
  SUBCASE("consistency with a stretched single edge") {
    for (int ell = 1; ell <= 6; ++ell) {
      for (const Rational lambda : {Rational(1), Rational(1, 2), Rational(2)}) {
        const auto P = path_transfer(ell, lambda);
        Rational total(0);
        for (int su : {0, 1})
          for (int sv : {0, 1}) {
            Rational w = P[su][sv];
            if (su) w *= lambda;
            if (sv) w *= lambda;
            total += w;
          }
        CHECK(total == partition_function(HardCoreQ{gen_path(2 * ell + 2), lambda}));
      }
    }
  }
  SUBCASE("a doubly-occupied path supports one vertex fewer") {
    // polynomial route: F_m coefficients by the path recurrence
    for (int ell = 1; ell <= 6; ++ell) {
      std::vector<std::vector<long long>> F{{1}, {1, 1}};  // F0, F1 in powers of lambda
      for (int m = 2; m <= 2 * ell; ++m) {
        auto next = F[m - 1];
        next.resize(std::max(F[m - 1].size(), F[m - 2].size() + 1), 0);
        for (std::size_t d = 0; d < F[m - 2].size(); ++d) next[d + 1] += F[m - 2][d];
        F.push_back(std::move(next));
      }
      const int deg_p11 = static_cast<int>(F[2 * ell - 2].size()) - 1;
      CHECK(deg_p11 == ell - 1);  // max internal cardinality drops to ell-1
      const int deg_p00 = static_cast<int>(F[2 * ell].size()) - 1;
      CHECK(deg_p00 == ell);
    }
  }
}

TEST_CASE("instance construction") {
  auto inst = make_torpid_instance(k33(), 1);
  CHECK(inst.part_size == 3);
  CHECK(inst.stretched.n() == (6 * 1 + 2) * 3);
  CHECK(inst.alpha == Rational(1, 2));
  CHECK(inst.alpha_verified);
  CHECK(inst.branch_map.size() == 6);
  for (int v = 0; v < 6; ++v) CHECK(inst.branch_map[v] == v);

  for (int ell : {2, 3}) {
    auto big = make_torpid_instance(k33(), ell);
    CHECK(big.stretched.n() == (6 * ell + 2) * 3);
  }

  CHECK_THROWS_AS(make_torpid_instance(gen_cycle(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(make_torpid_instance(gen_star(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(make_torpid_instance(k33(), 0), std::invalid_argument);
}

TEST_CASE("branch vertices are pairwise non-adjacent after stretching") {
  auto inst = make_torpid_instance(k33(), 1);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      CHECK_FALSE(inst.stretched.has_edge(inst.branch_map[u], inst.branch_map[v]));
}

TEST_CASE("balance weights on a single-edge base") {
  auto inst = make_torpid_instance(gen_path(2), 1);
  auto w = balance_weights(inst, Rational(1));
  CHECK(w.less == 2);
  CHECK(w.eq == 4);
  CHECK(w.greater == 2);
  CHECK(w.less + w.eq + w.greater ==
        partition_function(HardCoreQ{inst.stretched, Rational(1)}));
}

TEST_CASE("balance totals equal the stretched partition function (K33)") {
  auto inst = make_torpid_instance(k33(), 1);
  for (const Rational lambda : {Rational(1), Rational(1, 2), Rational(2)}) {
    auto w = balance_weights(inst, lambda);
    CHECK(w.less + w.eq + w.greater ==
          partition_function(HardCoreQ{inst.stretched, lambda}));
  }
  SUBCASE("independent set count matches the balanced bucket totals") {
    CHECK(count_independent_sets(inst.stretched) == 83780);
  }
}

TEST_CASE("one-sided weights dominate lambda^((3l+1)n) on cubic bases") {
  auto inst = make_torpid_instance(k33(), 1);
  for (const Rational lambda : {Rational(2), Rational(8)}) {
    auto w = balance_weights(inst, lambda);
    Rational floor(1);
    for (int i = 0; i < (3 * inst.ell + 1) * inst.part_size; ++i) floor *= lambda;
    CHECK(w.less >= floor);
    CHECK(w.greater >= floor);
  }
}

TEST_CASE("deficient path counting") {
  auto inst = make_torpid_instance(k33(), 1);
  CHECK(deficient_path_count(inst, VertexSubset(6)) == 0);
  CHECK(deficient_path_count(inst, VertexSubset::of(6, {0, 1, 2})) == 0);
  CHECK(deficient_path_count(inst, VertexSubset::full(6)) == 9);
  CHECK(deficient_path_count(inst, VertexSubset::of(6, {0, 3})) == 1);
}

TEST_CASE("max balanced size: formula vs whole-graph enumeration") {
  auto inst = make_torpid_instance(k33(), 1);
  CHECK(max_balanced_size(inst) == 10);

  // independent oracle: enumerate the stretched graph and take the maximum
  // over balanced independent sets directly
  long long best = -1;
  VertexSubset left(inst.stretched.n()), right(inst.stretched.n());
  for (int v = 0; v < 6; ++v)
    (inst.side_of[v] == 0 ? left : right).set(inst.branch_map[v]);
  for_each_independent_set(inst.stretched, [&](const VertexSubset& s) {
    VertexSubset a = s;
    a &= left;
    VertexSubset b = s;
    b &= right;
    if (a.count() == b.count()) best = std::max<long long>(best, s.count());
  });
  CHECK(best == 10);

  SUBCASE("below both paper bounds for the verified expander") {
    // max <= (3l + 2/(2+alpha)) n, strictly below the one-sided (3l+1) n
    const Rational a = inst.alpha;
    const Rational bound = (Rational(3 * inst.ell) + Rational(2) / (2 + a)) * 3;
    CHECK(Rational(max_balanced_size(inst)) <= bound);
    CHECK(max_balanced_size(inst) < (3 * inst.ell + 1) * 3);
  }
}

TEST_CASE("expansion-driven deficiency lower bounds (exhaustive, n <= 8)") {
  RngStream rng(60);
  std::vector<Graph> bases{k33(), cube_q3()};
  for (int n : {5, 6, 7, 8}) {
    Graph best;
    Rational best_alpha(-1);
    for (int trial = 0; trial < 40; ++trial) {
      Graph g;
      try {
        g = gen_random_cubic_bipartite(n, rng);
      } catch (const std::runtime_error&) {
        continue;
      }
      auto a = measured_expansion_alpha(g);
      if (a && *a > best_alpha) {
        best_alpha = *a;
        best = g;
      }
    }
    REQUIRE(best_alpha > 0);
    bases.push_back(best);
  }
  for (const auto& base : bases) {
    auto inst = make_torpid_instance(base, 1);
    REQUIRE(inst.alpha_verified);
    const int n = inst.part_size;
    const Rational a = inst.alpha;
    auto sweep = sweep_branch_patterns(inst);
    for (int k = 0; k <= n; ++k) {
      const long long md = sweep.min_deficiency_balanced[k];
      REQUIRE(md >= 0);
      if (Rational(k) >= Rational(n) / (2 + a) && 3 * k <= 2 * n)
        CHECK(Rational(md) >= (2 + a) * k - n);
      if (3 * k > 2 * n) CHECK(md >= 6 * k - 3 * n);
    }
  }
}

TEST_CASE("conductance ratio") {
  auto inst = make_torpid_instance(k33(), 1);
  SUBCASE("small lambda: the balanced class dominates") {
    auto rep = conductance_ratio(inst, Rational(1, 100));
    CHECK(rep.ratio >= 1);
  }
  SUBCASE("huge lambda: ratio collapses below the paper bound") {
    const Rational lam = Rational(BigInt(1) << 50);
    auto rep = conductance_ratio(inst, lam);
    CHECK(rep.below_paper_bound);
    CHECK(rep.log10_ratio < rep.log10_paper_bound);
    // leading term 144 * lambda^{-2}: the deficit of the densest balanced
    // sets is exactly two vertices here
    const double predicted = std::log10(144.0) - 2 * 50 * std::log10(2.0);
    CHECK(std::abs(rep.log10_ratio - predicted) < 1e-6);
  }
  SUBCASE("ratio decreases in lambda beyond the threshold") {
    auto r40 = conductance_ratio(inst, Rational(BigInt(1) << 40));
    auto r50 = conductance_ratio(inst, Rational(BigInt(1) << 50));
    CHECK(r50.ratio < r40.ratio);
  }
  SUBCASE("balanced-class weight degree matches the max balanced size") {
    const Rational l1 = Rational(BigInt(1) << 50);
    const Rational l2 = Rational(BigInt(1) << 51);
    auto w1 = balance_weights(inst, l1);
    auto w2 = balance_weights(inst, l2);
    const double growth =
        log10_rational(w2.eq) - log10_rational(w1.eq);
    CHECK(std::abs(growth / std::log10(2.0) - 10.0) < 1e-6);  // degree 10
    const double coeff = log10_rational(w1.eq) - 10 * 50 * std::log10(2.0);
    CHECK(std::abs(coeff - std::log10(144.0)) < 1e-6);
  }
}
