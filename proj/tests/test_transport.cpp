#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hardcore/transport.hpp"
#include "oracles.hpp"

using namespace hardcore;
using namespace hardcore::testing;

namespace {

Distribution<Rational> point_mass(int universe, const VertexSubset& s) {
  return Distribution<Rational>{universe, {{s, Rational(1)}}};
}

Distribution<Rational> random_distribution(int universe, int atoms, RngStream& rng) {
  std::map<VertexSubset, Rational, CanonicalLess> got;
  while (static_cast<int>(got.size()) < atoms) {
    VertexSubset s(universe);
    for (int v = 0; v < universe; ++v)
      if (rng.next_unit() < 0.5) s.set(v);
    got.emplace(std::move(s), Rational(1 + rng.next_below(9), 1 + rng.next_below(7)));
  }
  Rational total(0);
  for (auto& [s, p] : got) total += p;
  Distribution<Rational> d;
  d.universe = universe;
  for (auto& [s, p] : got) d.atoms.emplace_back(s, p / total);
  return d;
}

}  // namespace

TEST_CASE("point mass cases") {
  auto empty = VertexSubset(3);
  auto one = VertexSubset::of(3, {1});
  CHECK(exact_w1_hamming(point_mass(3, empty), point_mass(3, one)) == 1);
  CHECK(exact_w1_hamming(point_mass(3, empty), point_mass(3, empty)) == 0);
  auto far = VertexSubset::of(3, {0, 1, 2});
  CHECK(exact_w1_hamming(point_mass(3, empty), point_mass(3, far)) == 3);
}

TEST_CASE("identical distributions cost nothing") {
  HardCoreQ m{gen_cycle(5), Rational(2, 3)};
  auto mu = hardcore_distribution(m);
  CHECK(exact_w1_hamming(mu, mu) == 0);
}

TEST_CASE("single edge pinned pair costs 3/2") {
  HardCoreQ m{gen_path(2), Rational(1)};
  auto d0 = pinned_distribution(m, Pins{{1, 0}});
  auto d1 = pinned_distribution(m, Pins{{1, 1}});
  CHECK(exact_w1_hamming(d0, d1) == Rational(3, 2));
  CHECK(exact_w1_hamming(d1, d0) == Rational(3, 2));

  // double route agrees
  HardCoreD md{gen_path(2), 1.0};
  auto f0 = pinned_distribution(md, Pins{{1, 0}});
  auto f1 = pinned_distribution(md, Pins{{1, 1}});
  CHECK(exact_w1_hamming(f0, f1) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("solver agrees with the basic-solution brute force oracle") {
  RngStream rng(555);
  for (int trial = 0; trial < 120; ++trial) {
    const int universe = 3 + static_cast<int>(rng.next_below(3));
    const int ma = 2 + static_cast<int>(rng.next_below(3));  // 2..4
    const int mb = 2 + static_cast<int>(rng.next_below(3));
    if (ma * mb > 20) continue;
    auto mu = random_distribution(universe, ma, rng);
    auto nu = random_distribution(universe, mb, rng);
    const Rational fast = exact_w1_hamming(mu, nu);
    const Rational slow = w1_bruteforce_small(mu, nu);
    CHECK(fast == slow);
  }
}

TEST_CASE("transport plan is a feasible coupling with matching cost") {
  RngStream rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const int universe = 4;
    auto mu = random_distribution(universe, 3 + rng.next_below(3), rng);
    auto nu = random_distribution(universe, 3 + rng.next_below(3), rng);
    auto plan = solve_w1_hamming(mu, nu);
    // reconstruct shipped mass per atom; the remainder stayed in place,
    // which is only possible between equal atoms
    std::vector<Rational> out(mu.atoms.size(), Rational(0));
    std::vector<Rational> in(nu.atoms.size(), Rational(0));
    Rational cost(0);
    for (const auto& f : plan.flows) {
      CHECK(f.mass > 0);
      out[f.from] += f.mass;
      in[f.to] += f.mass;
      cost += f.mass *
              mu.atoms[f.from].first.hamming_distance(nu.atoms[f.to].first);
    }
    CHECK(cost == plan.cost);
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) CHECK(out[i] <= mu.atoms[i].second);
    for (std::size_t j = 0; j < nu.atoms.size(); ++j) CHECK(in[j] <= nu.atoms[j].second);
    // unmoved mass must cancel between identical atoms
    std::map<VertexSubset, Rational, CanonicalLess> residual;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
      residual[mu.atoms[i].first] += mu.atoms[i].second - out[i];
    for (std::size_t j = 0; j < nu.atoms.size(); ++j)
      residual[nu.atoms[j].first] -= nu.atoms[j].second - in[j];
    for (auto& [s, r] : residual) CHECK(r == 0);
  }
}

TEST_CASE("metric sandwich: tv <= W1 <= diameter * tv") {
  RngStream rng(9000);
  for (int trial = 0; trial < 30; ++trial) {
    const int universe = 5;
    auto mu = random_distribution(universe, 4, rng);
    auto nu = random_distribution(universe, 4, rng);
    const Rational w1 = exact_w1_hamming(mu, nu);
    const Rational tv = tv_distance(mu, nu);
    CHECK(w1 >= tv);
    CHECK(w1 <= Rational(universe) * tv);
  }
}

TEST_CASE("mean-size difference is a valid lower bound (Lipschitz duality)") {
  RngStream rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    auto mu = random_distribution(5, 4, rng);
    auto nu = random_distribution(5, 4, rng);
    Rational ma(0), mb(0);
    for (auto& [s, p] : mu.atoms) ma += p * s.count();
    for (auto& [s, p] : nu.atoms) mb += p * s.count();
    const Rational gap = ma > mb ? ma - mb : mb - ma;
    CHECK(exact_w1_hamming(mu, nu) >= gap);
  }
}

TEST_CASE("support cap is enforced") {
  HardCoreQ m{gen_path(2), Rational(1)};
  auto d0 = pinned_distribution(m, Pins{{1, 0}});
  auto d1 = pinned_distribution(m, Pins{{1, 1}});
  CHECK_THROWS_AS(exact_w1_hamming(d0, d1, 2), CapExceeded);
}
