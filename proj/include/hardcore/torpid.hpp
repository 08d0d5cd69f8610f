#pragma once

#include <array>

#include "hardcore/exact.hpp"
#include "hardcore/families.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

inline constexpr int kDefaultBranchCap = 24;  // max 2n branch vertices

// A bipartite base graph stretched edge-wise by 2*ell internal vertices.
// Branch vertices keep their base ids; sides come from the 2-coloring.
struct TorpidInstance {
  Graph base;
  Graph stretched;
  std::vector<int> branch_map;
  int ell = 1;
  int part_size = 0;            // n: vertices per side of the base
  std::vector<int> side_of;     // base vertex -> 0 (left) / 1 (right)
  Rational alpha = 0;           // measured expansion constant of the base
  bool alpha_verified = false;  // alpha > 0 and check_expansion agreed
};

TorpidInstance make_torpid_instance(const Graph& base, int ell);

// Weight of the internal independent sets of one subdivided edge, by
// endpoint occupancy: P[0][0]=F_{2l}, P[0][1]=P[1][0]=F_{2l-1},
// P[1][1]=F_{2l-2}, with F_0=1, F_1=1+lambda, F_m=F_{m-1}+lambda*F_{m-2}.
template <class W>
std::array<std::array<W, 2>, 2> path_transfer(int ell, const W& lambda);

// Exhaustive statistics of branch-vertex occupancy patterns (they are
// pairwise non-adjacent in the stretched graph, so every pattern extends).
struct BranchSweep {
  int part_size = 0;
  long long pattern_count = 0;
  // min deficiency among balanced patterns with k vertices per side; -1 if none
  std::vector<long long> min_deficiency_balanced;
  // buckets: (kL, kR, deficiency, edges with one occupied endpoint) -> count
  std::map<std::array<int, 4>, long long> buckets;
};

BranchSweep sweep_branch_patterns(const TorpidInstance& inst,
                                  int branch_cap = kDefaultBranchCap);

template <class W>
struct BalanceWeights {
  W less, eq, greater;                     // total weight by balance sign
  std::vector<std::vector<W>> by_balance;  // [kL][kR] -> weight
};

template <class W>
BalanceWeights<W> balance_weights_from_sweep(const BranchSweep& sweep,
                                             const TorpidInstance& inst,
                                             const W& lambda);

template <class W>
BalanceWeights<W> balance_weights(const TorpidInstance& inst, const W& lambda,
                                  int branch_cap = kDefaultBranchCap);

// Base edges with both endpoints occupied by the pattern.
long long deficient_path_count(const TorpidInstance& inst,
                               const VertexSubset& branch_pattern);

// Exact maximum cardinality of a balanced independent set of the stretched
// graph: max over k of 2k + ell*m - minDeficiency(k).
long long max_balanced_size(const TorpidInstance& inst,
                            int branch_cap = kDefaultBranchCap);

struct ConductanceReport {
  Rational ratio;           // w_eq / min(w_less, w_greater)
  double log10_ratio;
  double log10_paper_bound; // n * log10(2^{6l+2} lambda^{2/(2+alpha)-1})
  bool below_paper_bound;
};

ConductanceReport conductance_ratio(const TorpidInstance& inst, const Rational& lambda,
                                    int branch_cap = kDefaultBranchCap);

}  // namespace hardcore
