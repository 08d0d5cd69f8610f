#pragma once

#include "hardcore/exact.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

inline constexpr std::size_t kDefaultSupportCap = 2000;

// One cell of an optimal transport plan between distribution supports.
struct TransportFlow {
  int from, to;   // atom indices into mu / nu
  Rational mass;
};

struct TransportPlan {
  Rational cost;
  std::vector<TransportFlow> flows;  // excludes mass left in place on equal atoms
};

// Exact minimum-cost transportation between two distributions under Hamming
// ground cost, solved by successive shortest paths with potentials. Mass
// shared on identical atoms is settled in place first (the cost is a metric).
TransportPlan solve_w1_hamming(const Distribution<Rational>& mu,
                               const Distribution<Rational>& nu,
                               std::size_t support_cap = kDefaultSupportCap);

// W1 with Hamming cost. The double overload converts the probabilities to
// exact dyadic rationals, renormalizes, and solves exactly.
template <class W>
W exact_w1_hamming(const Distribution<W>& mu, const Distribution<W>& nu,
                   std::size_t support_cap = kDefaultSupportCap);

}  // namespace hardcore
