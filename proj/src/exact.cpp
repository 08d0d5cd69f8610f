#include "hardcore/exact.hpp"

#include <algorithm>
#include <cmath>

namespace hardcore {

namespace {

// DFS deciding vertices n-1..0, exclude branch first: emits independent
// sets in increasing canonical (numeric) order.
template <class F>
void enumerate_rec(const Graph& g, int v, VertexSubset& cur, F&& emit) {
  if (v < 0) {
    emit(static_cast<const VertexSubset&>(cur));
    return;
  }
  enumerate_rec(g, v - 1, cur, emit);
  if (!g.neighbor_mask(v).intersects(cur)) {
    cur.set(v);
    enumerate_rec(g, v - 1, cur, emit);
    cur.reset(v);
  }
}

template <class F>
void enumerate_impl(const Graph& g, F&& emit) {
  VertexSubset cur(g.n());
  enumerate_rec(g, g.n() - 1, cur, emit);
}

template <class W>
std::vector<W> lambda_powers(const W& lambda, int up_to) {
  std::vector<W> p;
  p.reserve(up_to + 1);
  p.push_back(W(1));
  for (int i = 1; i <= up_to; ++i) p.push_back(p.back() * lambda);
  return p;
}

struct EnumerationAborted {};

}  // namespace

void for_each_independent_set(const Graph& g,
                              const std::function<void(const VertexSubset&)>& fn) {
  enumerate_impl(g, fn);
}

std::uint64_t count_independent_sets(const Graph& g, std::uint64_t cap) {
  std::uint64_t count = 0;
  try {
    enumerate_impl(g, [&](const VertexSubset&) {
      if (++count > cap) throw EnumerationAborted{};
    });
  } catch (const EnumerationAborted&) {
    return cap + 1;
  }
  return count;
}

std::vector<VertexSubset> enumerate_independent_sets(const Graph& g, std::size_t cap) {
  std::vector<VertexSubset> out;
  try {
    enumerate_impl(g, [&](const VertexSubset& s) {
      if (out.size() >= cap) throw EnumerationAborted{};
      out.push_back(s);
    });
  } catch (const EnumerationAborted&) {
    throw CapExceeded("independent-set enumeration exceeded cap");
  }
  return out;
}

template <class W>
W partition_function(const HardCore<W>& m, std::size_t cap) {
  const auto pow = lambda_powers(m.lambda, m.graph.n());
  W z(0);
  std::size_t count = 0;
  try {
    enumerate_impl(m.graph, [&](const VertexSubset& s) {
      if (++count > cap) throw EnumerationAborted{};
      z += pow[s.count()];
    });
  } catch (const EnumerationAborted&) {
    throw CapExceeded("partition function enumeration exceeded cap");
  }
  return z;
}

template <class W>
Distribution<W> hardcore_distribution(const HardCore<W>& m, std::size_t cap) {
  const auto pow = lambda_powers(m.lambda, m.graph.n());
  Distribution<W> d;
  d.universe = m.graph.n();
  W z(0);
  try {
    enumerate_impl(m.graph, [&](const VertexSubset& s) {
      if (d.atoms.size() >= cap) throw EnumerationAborted{};
      const W w = pow[s.count()];
      d.atoms.emplace_back(s, w);
      z += w;
    });
  } catch (const EnumerationAborted&) {
    throw CapExceeded("distribution enumeration exceeded cap");
  }
  for (auto& [s, p] : d.atoms) p /= z;
  return d;
}

PinnedReduction reduce_for_pins(const Graph& g, const Pins& pins) {
  VertexSubset ones(g.n()), removed(g.n());
  for (auto [v, value] : pins) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("pin vertex out of range");
    if (value != 0 && value != 1) throw std::invalid_argument("pin value must be 0 or 1");
    removed.set(v);
    if (value == 1) ones.set(v);
  }
  bool clash = false;
  ones.for_each_member([&](int v) {
    if (g.neighbor_mask(v).intersects(ones)) clash = true;
    removed |= g.neighbor_mask(v);
  });
  if (clash)
    throw std::invalid_argument("adjacent vertices pinned to 1: empty support");
  // A vertex pinned to 0 may also neighbor a 1-pin; that is consistent.
  VertexSubset keep = VertexSubset::full(g.n());
  keep -= removed;
  auto sub = induced_subgraph(g, keep);
  return PinnedReduction{std::move(sub.graph), std::move(sub.to_old), std::move(ones)};
}

template <class W>
Distribution<W> pinned_distribution(const HardCore<W>& m, const Pins& pins,
                                    std::size_t cap) {
  const auto red = reduce_for_pins(m.graph, pins);
  const HardCore<W> sub{red.reduced, m.lambda};
  auto base = hardcore_distribution(sub, cap);
  Distribution<W> d;
  d.universe = m.graph.n();
  d.atoms.reserve(base.atoms.size());
  for (auto& [s, p] : base.atoms) {
    VertexSubset mapped = red.ones_mask;
    s.for_each_member([&](int v) { mapped.set(red.to_old[v]); });
    d.atoms.emplace_back(std::move(mapped), std::move(p));
  }
  // The reduced-id to original-id map preserves bit significance, so the
  // canonical order survives the re-embedding.
  return d;
}

template <class W>
W marginal(const HardCore<W>& m, int v, std::size_t cap) {
  if (v < 0 || v >= m.graph.n()) throw std::invalid_argument("vertex out of range");
  const auto pow = lambda_powers(m.lambda, m.graph.n());
  W z(0), zv(0);
  std::size_t count = 0;
  try {
    enumerate_impl(m.graph, [&](const VertexSubset& s) {
      if (++count > cap) throw EnumerationAborted{};
      const W& w = pow[s.count()];
      z += w;
      if (s.test(v)) zv += w;
    });
  } catch (const EnumerationAborted&) {
    throw CapExceeded("marginal enumeration exceeded cap");
  }
  return zv / z;
}

template <class W>
W tv_distance(const Distribution<W>& mu, const Distribution<W>& nu) {
  if (mu.universe != nu.universe)
    throw std::invalid_argument("distributions over different universes");
  W acc(0);
  std::size_t i = 0, j = 0;
  while (i < mu.atoms.size() || j < nu.atoms.size()) {
    if (j == nu.atoms.size()) {
      acc += mu.atoms[i++].second;
    } else if (i == mu.atoms.size()) {
      acc += nu.atoms[j++].second;
    } else {
      int c = VertexSubset::compare(mu.atoms[i].first, nu.atoms[j].first);
      if (c < 0) {
        acc += mu.atoms[i++].second;
      } else if (c > 0) {
        acc += nu.atoms[j++].second;
      } else {
        const W& a = mu.atoms[i++].second;
        const W& b = nu.atoms[j++].second;
        acc += a > b ? a - b : b - a;
      }
    }
  }
  return acc / W(2);
}

template <class W>
void validate_distribution(const Distribution<W>& d, double slack) {
  W total(0);
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    const auto& [s, p] = d.atoms[i];
    if (s.universe_size() != d.universe)
      throw std::logic_error("distribution atom universe mismatch");
    if (!(p > W(0))) throw std::logic_error("non-positive atom probability");
    if (i > 0 && VertexSubset::compare(d.atoms[i - 1].first, s) >= 0)
      throw std::logic_error("atoms not in canonical order / duplicated");
    total += p;
  }
  if constexpr (std::is_same_v<W, double>) {
    if (std::abs(total - 1.0) > slack) throw std::logic_error("probabilities do not sum to 1");
  } else {
    if (total != W(1)) throw std::logic_error("probabilities do not sum to 1 exactly");
  }
}

int TransitionMatrix::state_index(const VertexSubset& s) const {
  auto it = std::lower_bound(states.begin(), states.end(), s,
                             [](const VertexSubset& a, const VertexSubset& b) {
                               return VertexSubset::compare(a, b) < 0;
                             });
  if (it == states.end() || !(*it == s)) throw std::invalid_argument("unknown state");
  return static_cast<int>(it - states.begin());
}

TransitionMatrix transition_matrix(const Graph& g, double lambda,
                                   std::size_t state_cap) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  TransitionMatrix tm;
  tm.states = enumerate_independent_sets(g, state_cap);
  const int n = g.n();
  const double p_add = lambda / (1.0 + lambda);
  const double per_vertex = 1.0 / n;
  tm.rows.resize(tm.states.size());
  for (std::size_t si = 0; si < tm.states.size(); ++si) {
    const VertexSubset& state = tm.states[si];
    double self = 0.0;
    std::vector<std::pair<int, double>> row;
    for (int v = 0; v < n; ++v) {
      VertexSubset next = state;
      if (state.test(v)) {
        // occupied: neighborhood is free by independence
        next.reset(v);
        row.emplace_back(tm.state_index(next), per_vertex * (1.0 - p_add));
        self += per_vertex * p_add;
      } else if (!g.neighbor_mask(v).intersects(state)) {
        next.set(v);
        row.emplace_back(tm.state_index(next), per_vertex * p_add);
        self += per_vertex * (1.0 - p_add);
      } else {
        self += per_vertex;  // blocked: no-op
      }
    }
    row.emplace_back(static_cast<int>(si), self);
    std::sort(row.begin(), row.end());
    tm.rows[si] = std::move(row);
  }
  return tm;
}

std::vector<double> stationary_vector(const Graph& g, double lambda,
                                      const TransitionMatrix& tm) {
  (void)g;
  std::vector<double> pi(tm.states.size());
  double z = 0.0;
  for (std::size_t i = 0; i < tm.states.size(); ++i) {
    pi[i] = std::pow(lambda, tm.states[i].count());
    z += pi[i];
  }
  for (auto& x : pi) x /= z;
  return pi;
}

namespace {

double worst_tv(const std::vector<std::vector<double>>& rows,
                const std::vector<double>& pi) {
  double worst = 0.0;
  for (const auto& row : rows) {
    double acc = 0.0;
    for (std::size_t j = 0; j < pi.size(); ++j) acc += std::abs(row[j] - pi[j]);
    worst = std::max(worst, acc / 2.0);
  }
  return worst;
}

}  // namespace

MixingProfile mixing_profile(const Graph& g, double lambda, double horizon_factor,
                             std::size_t state_cap, int step_budget) {
  const auto tm = transition_matrix(g, lambda, state_cap);
  const auto pi = stationary_vector(g, lambda, tm);
  const std::size_t s = tm.states.size();

  // rows of P^t for every pure start, advanced one step at a time
  std::vector<std::vector<double>> cur(s, std::vector<double>(s, 0.0));
  for (std::size_t i = 0; i < s; ++i) cur[i][i] = 1.0;
  std::vector<std::vector<double>> next(s, std::vector<double>(s));

  MixingProfile out;
  out.d.push_back(worst_tv(cur, pi));
  if (out.d[0] <= 0.25) out.t_mix = 0;

  for (int t = 1; t <= step_budget; ++t) {
    for (std::size_t i = 0; i < s; ++i) {
      auto& dst = next[i];
      std::fill(dst.begin(), dst.end(), 0.0);
      const auto& src = cur[i];
      for (std::size_t j = 0; j < s; ++j) {
        const double a = src[j];
        if (a == 0.0) continue;
        for (const auto& [k, p] : tm.rows[j]) dst[k] += a * p;
      }
    }
    cur.swap(next);
    out.d.push_back(worst_tv(cur, pi));
    if (out.t_mix < 0 && out.d[t] <= 0.25) out.t_mix = t;
    if (out.t_mix >= 0 &&
        t >= static_cast<int>(std::ceil(horizon_factor * out.t_mix)))
      break;
  }
  if (out.t_mix < 0)
    throw std::runtime_error("mixing time did not converge within step budget (bug: chain is ergodic)");
  return out;
}

int exact_mixing_time(const HardCore<double>& m, std::size_t state_cap, int step_budget) {
  return mixing_profile(m.graph, m.lambda, 1.0, state_cap, step_budget).t_mix;
}

// explicit instantiations
template double partition_function<double>(const HardCore<double>&, std::size_t);
template Rational partition_function<Rational>(const HardCore<Rational>&, std::size_t);
template Distribution<double> hardcore_distribution<double>(const HardCore<double>&, std::size_t);
template Distribution<Rational> hardcore_distribution<Rational>(const HardCore<Rational>&, std::size_t);
template Distribution<double> pinned_distribution<double>(const HardCore<double>&, const Pins&, std::size_t);
template Distribution<Rational> pinned_distribution<Rational>(const HardCore<Rational>&, const Pins&, std::size_t);
template double marginal<double>(const HardCore<double>&, int, std::size_t);
template Rational marginal<Rational>(const HardCore<Rational>&, int, std::size_t);
template double tv_distance<double>(const Distribution<double>&, const Distribution<double>&);
template Rational tv_distance<Rational>(const Distribution<Rational>&, const Distribution<Rational>&);
template void validate_distribution<double>(const Distribution<double>&, double);
template void validate_distribution<Rational>(const Distribution<Rational>&, double);

}  // namespace hardcore
