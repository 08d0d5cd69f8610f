#include "hardcore/torpid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace hardcore {

TorpidInstance make_torpid_instance(const Graph& base, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  auto coloring = bipartite_coloring(base);
  if (!coloring) throw std::invalid_argument("base graph must be bipartite");
  TorpidInstance inst;
  inst.base = base;
  inst.ell = ell;
  inst.side_of = *coloring;
  const int left = static_cast<int>(std::count(coloring->begin(), coloring->end(), 0));
  if (2 * left != base.n())
    throw std::invalid_argument("base graph parts must be balanced");
  inst.part_size = left;
  auto sr = stretch(base, 2 * ell);
  inst.stretched = std::move(sr.graph);
  inst.branch_map = std::move(sr.branch_map);
  if (inst.part_size >= 2 && inst.part_size <= kDefaultExpansionCap) {
    if (auto a = measured_expansion_alpha(base)) {
      inst.alpha = *a;
      inst.alpha_verified =
          inst.alpha > 0 &&
          check_expansion(base, static_cast<double>(inst.alpha) * 0.999);
    }
  }
  return inst;
}

template <class W>
std::array<std::array<W, 2>, 2> path_transfer(int ell, const W& lambda) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  // F[m] = hard-core partition function of a path on m vertices
  std::vector<W> F{W(1), W(1) + lambda};
  for (int m = 2; m <= 2 * ell; ++m)
    F.push_back(F[m - 1] + lambda * F[m - 2]);
  std::array<std::array<W, 2>, 2> P;
  P[0][0] = F[2 * ell];
  P[0][1] = P[1][0] = F[2 * ell - 1];
  P[1][1] = F[2 * ell - 2];
  return P;
}

BranchSweep sweep_branch_patterns(const TorpidInstance& inst, int branch_cap) {
  const Graph& base = inst.base;
  const int nb = base.n();
  if (nb > branch_cap) throw CapExceeded("branch enumeration exceeds cap");
  if (nb > 30) throw CapExceeded("branch enumeration limited to 30 vertices");

  BranchSweep sweep;
  sweep.part_size = inst.part_size;
  sweep.min_deficiency_balanced.assign(inst.part_size + 1, -1);

  std::uint32_t left_mask = 0;
  for (int v = 0; v < nb; ++v)
    if (inst.side_of[v] == 0) left_mask |= 1u << v;

  const auto edges = base.edges();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_bits;
  edge_bits.reserve(edges.size());
  for (auto [u, v] : edges) edge_bits.emplace_back(1u << u, 1u << v);

  std::vector<int> deg(nb);
  for (int v = 0; v < nb; ++v) deg[v] = base.degree(v);

  const std::uint64_t total = std::uint64_t(1) << nb;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const std::uint32_t s = static_cast<std::uint32_t>(bits);
    const int kL = std::popcount(s & left_mask);
    const int kR = std::popcount(s & ~left_mask);
    int deficient = 0;
    for (auto [bu, bv] : edge_bits)
      if ((s & bu) && (s & bv)) ++deficient;
    int sum_deg = 0;
    std::uint32_t t = s;
    while (t) {
      sum_deg += deg[std::countr_zero(t)];
      t &= t - 1;
    }
    const int one_end = sum_deg - 2 * deficient;
    ++sweep.buckets[{kL, kR, deficient, one_end}];
    ++sweep.pattern_count;
    if (kL == kR) {
      auto& md = sweep.min_deficiency_balanced[kL];
      if (md < 0 || deficient < md) md = deficient;
    }
  }
  return sweep;
}

template <class W>
BalanceWeights<W> balance_weights_from_sweep(const BranchSweep& sweep,
                                             const TorpidInstance& inst,
                                             const W& lambda) {
  const int m = inst.base.m();
  const int nb = inst.base.n();
  const auto P = path_transfer(inst.ell, lambda);

  auto powers = [m](const W& x) {
    std::vector<W> p{W(1)};
    for (int i = 1; i <= m; ++i) p.push_back(p.back() * x);
    return p;
  };
  const auto p00 = powers(P[0][0]);
  const auto p01 = powers(P[0][1]);
  const auto p11 = powers(P[1][1]);
  std::vector<W> lam{W(1)};
  for (int i = 1; i <= nb; ++i) lam.push_back(lam.back() * lambda);

  BalanceWeights<W> w;
  w.less = w.eq = w.greater = W(0);
  w.by_balance.assign(inst.part_size + 1, std::vector<W>(inst.part_size + 1, W(0)));

  for (const auto& [key, count] : sweep.buckets) {
    const auto [kL, kR, deficient, one_end] = key;
    const int both_free = m - one_end - deficient;
    W term = W(count) * lam[kL + kR] * p00[both_free] * p01[one_end] * p11[deficient];
    w.by_balance[kL][kR] += term;
    if (kL < kR) w.less += term;
    else if (kL > kR) w.greater += term;
    else w.eq += term;
  }
  return w;
}

template <class W>
BalanceWeights<W> balance_weights(const TorpidInstance& inst, const W& lambda,
                                  int branch_cap) {
  return balance_weights_from_sweep(sweep_branch_patterns(inst, branch_cap), inst,
                                    lambda);
}

long long deficient_path_count(const TorpidInstance& inst,
                               const VertexSubset& branch_pattern) {
  if (branch_pattern.universe_size() != inst.base.n())
    throw std::invalid_argument("pattern universe must match the base graph");
  long long deficient = 0;
  for (auto [u, v] : inst.base.edges())
    if (branch_pattern.test(u) && branch_pattern.test(v)) ++deficient;
  return deficient;
}

long long max_balanced_size(const TorpidInstance& inst, int branch_cap) {
  const auto sweep = sweep_branch_patterns(inst, branch_cap);
  const long long internal = static_cast<long long>(inst.ell) * inst.base.m();
  long long best = -1;
  for (int k = 0; k <= sweep.part_size; ++k) {
    const long long md = sweep.min_deficiency_balanced[k];
    if (md < 0) continue;
    best = std::max(best, 2LL * k + internal - md);
  }
  return best;
}

ConductanceReport conductance_ratio(const TorpidInstance& inst, const Rational& lambda,
                                    int branch_cap) {
  const auto w = balance_weights(inst, lambda, branch_cap);
  if (w.less == 0 || w.greater == 0)
    throw std::invalid_argument("degenerate instance: one-sided weight is zero");
  ConductanceReport rep;
  rep.ratio = w.eq / std::min(w.less, w.greater);
  rep.log10_ratio = log10_rational(rep.ratio);
  const double a = static_cast<double>(inst.alpha);
  const double factor_log10 = (6.0 * inst.ell + 2.0) * std::log10(2.0) +
                              (2.0 / (2.0 + a) - 1.0) * log10_rational(lambda);
  rep.log10_paper_bound = inst.part_size * factor_log10;
  rep.below_paper_bound = rep.log10_ratio < rep.log10_paper_bound;
  return rep;
}

template std::array<std::array<double, 2>, 2> path_transfer<double>(int, const double&);
template std::array<std::array<Rational, 2>, 2> path_transfer<Rational>(int, const Rational&);
template BalanceWeights<double> balance_weights_from_sweep<double>(const BranchSweep&, const TorpidInstance&, const double&);
template BalanceWeights<Rational> balance_weights_from_sweep<Rational>(const BranchSweep&, const TorpidInstance&, const Rational&);
template BalanceWeights<double> balance_weights<double>(const TorpidInstance&, const double&, int);
template BalanceWeights<Rational> balance_weights<Rational>(const TorpidInstance&, const Rational&, int);

}  // namespace hardcore
