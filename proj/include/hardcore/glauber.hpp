#pragma once

#include "hardcore/exact.hpp"
#include "hardcore/rng.hpp"

namespace hardcore {

struct ChainState {
  VertexSubset occupancy;
  long long step_count = 0;
};

// One Glauber update: draw a uniform vertex; if its neighborhood is free,
// occupy with probability lambda/(1+lambda), else vacate; blocked vertices
// are a no-op. Consumes one vertex draw and at most one uniform.
void glauber_step(ChainState& state, const HardCore<double>& m, RngStream& rng);

// The unconditioned variant: the drawn vertex is resampled as an independent
// Bernoulli(lambda/(1+lambda)) regardless of its neighborhood. Its stationary
// law is the product distribution.
void product_chain_step(ChainState& state, const HardCore<double>& m, RngStream& rng);

struct TrajectorySummary {
  VertexSubset final_state;
  std::vector<long long> occupied_steps;  // per-vertex time spent occupied
  long long steps = 0;
};

struct MonotoneRunResult {
  TrajectorySummary upper;  // product chain from all-1
  TrajectorySummary lower;  // Glauber chain from all-0
  bool dominance_held = false;
};

// Runs both chains on shared randomness (same vertex draw, same uniform per
// step) and reports whether the lower chain stayed pointwise below the upper
// one at every step.
MonotoneRunResult monotone_coupled_run(const HardCore<double>& m, long long steps,
                                       RngStream& rng);

long long default_burn_in(int n);  // 50 * n * ceil(ln(n+1))

// Glauber sample on the pin-reduced graph from the empty set, re-embedded
// with the pins applied.
VertexSubset sample_stationary(const HardCore<double>& m, const Pins& pins,
                               long long burn_in, RngStream& rng);

}  // namespace hardcore
