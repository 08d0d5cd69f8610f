#include "hardcore/glauber.hpp"

#include <cassert>
#include <cmath>

namespace hardcore {

void glauber_step(ChainState& state, const HardCore<double>& m, RngStream& rng) {
  const Graph& g = m.graph;
  const int v = static_cast<int>(rng.next_below(g.n()));
  if (!g.neighbor_mask(v).intersects(state.occupancy)) {
    const double p_add = m.lambda / (1.0 + m.lambda);
    state.occupancy.assign(v, rng.next_unit() < p_add);
  }
  // else: blocked, no-op (and v is vacant whenever the state is independent)
  ++state.step_count;
}

void product_chain_step(ChainState& state, const HardCore<double>& m, RngStream& rng) {
  const int v = static_cast<int>(rng.next_below(m.graph.n()));
  const double p_add = m.lambda / (1.0 + m.lambda);
  state.occupancy.assign(v, rng.next_unit() < p_add);
  ++state.step_count;
}

MonotoneRunResult monotone_coupled_run(const HardCore<double>& m, long long steps,
                                       RngStream& rng) {
  const Graph& g = m.graph;
  const int n = g.n();
  const double p_add = m.lambda / (1.0 + m.lambda);

  VertexSubset upper = VertexSubset::full(n);
  VertexSubset lower(n);
  std::vector<long long> up_occ(n, 0), lo_occ(n, 0);
  std::vector<long long> up_since(n, 0), lo_since(n, 0);  // occupied-since step
  bool dominance = lower.is_subset_of(upper);

  auto flip = [](VertexSubset& s, std::vector<long long>& occ,
                 std::vector<long long>& since, int v, bool occupy, long long t) {
    const bool was = s.test(v);
    if (was == occupy) return;
    if (was) occ[v] += t - since[v];
    else since[v] = t;
    s.assign(v, occupy);
  };

  for (long long t = 0; t < steps; ++t) {
    const int v = static_cast<int>(rng.next_below(n));
    const double u = rng.next_unit();
    const bool occupy = u < p_add;
    flip(upper, up_occ, up_since, v, occupy, t);
    if (!g.neighbor_mask(v).intersects(lower))
      flip(lower, lo_occ, lo_since, v, occupy, t);
    if (dominance && !lower.is_subset_of(upper)) dominance = false;
  }
  for (int v = 0; v < n; ++v) {
    if (upper.test(v)) up_occ[v] += steps - up_since[v];
    if (lower.test(v)) lo_occ[v] += steps - lo_since[v];
  }

  MonotoneRunResult out;
  out.upper = TrajectorySummary{upper, std::move(up_occ), steps};
  out.lower = TrajectorySummary{lower, std::move(lo_occ), steps};
  out.dominance_held = dominance;
  return out;
}

long long default_burn_in(int n) {
  return 50LL * n * static_cast<long long>(std::ceil(std::log(n + 1.0)));
}

VertexSubset sample_stationary(const HardCore<double>& m, const Pins& pins,
                               long long burn_in, RngStream& rng) {
  const auto red = reduce_for_pins(m.graph, pins);
  VertexSubset out = red.ones_mask;
  if (red.reduced.n() > 0) {
    HardCore<double> sub{red.reduced, m.lambda};
    ChainState state{VertexSubset(red.reduced.n()), 0};
    for (long long t = 0; t < burn_in; ++t) glauber_step(state, sub, rng);
    assert(red.reduced.is_independent(state.occupancy));
    state.occupancy.for_each_member([&](int v) { out.set(red.to_old[v]); });
  }
  return out;
}

}  // namespace hardcore
