#pragma once

#include "hardcore/graph.hpp"
#include "hardcore/rational.hpp"
#include "hardcore/rng.hpp"

namespace hardcore {

// S_{i,j,k}: tree with one degree-3 vertex and leaves at distances i, j, k.
struct SubdividedClawSpec {
  int i, j, k;
  SubdividedClawSpec(int i_, int j_, int k_);
};

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_star(int leaves);
Graph gen_grid(int rows, int cols);

// Center is vertex 0; legs are consecutive runs of ids.
Graph gen_subdivided_claw(const SubdividedClawSpec& spec);

// Tiling of the 10-vertex basic block (a K4 with two attached 4-cycles),
// glued by sharing the right square's far corner with the next column's K4
// and the top square's far corner with the next row's K4.
Graph gen_efree_block(int rows, int cols);

// An E whose six vertices are all joined to the endpoint a of a disjoint
// path with path_len edges; skew-star-free but not E-free for long paths.
Graph gen_skewstar_witness(int path_len);

// Union of 3 random perfect matchings between parts {0..n-1} and {n..2n-1},
// rejecting parallel edges. Throws after the retry budget is exhausted.
Graph gen_random_cubic_bipartite(int n, RngStream& rng, int retry_budget = 1000);
Graph gen_random_cubic_bipartite(int n, std::uint64_t seed, int retry_budget = 1000);

// Random connected graph with max degree <= max_deg: random spanning tree
// respecting the cap, then extra edges at the given density.
Graph gen_random_connected_max_degree(int n, int max_deg, double extra_edge_prob,
                                      RngStream& rng);

// Random simple graph, each pair kept with probability p subject to the cap.
Graph gen_random_max_degree(int n, int max_deg, double p, RngStream& rng);

inline constexpr int kDefaultExpansionCap = 14;

// True iff every one-sided subset S with |S| <= floor(2n/3) has
// |boundary(S)| >= (1+alpha)|S|; brute force over all subsets of each part.
bool check_expansion(const Graph& g, double alpha, int part_cap = kDefaultExpansionCap);

// Largest alpha for which check_expansion holds, as an exact rational:
// min over relevant S of |boundary(S)|/|S| - 1. Nullopt when no subset is
// in range (vacuous expansion).
std::optional<Rational> measured_expansion_alpha(const Graph& g,
                                                 int part_cap = kDefaultExpansionCap);

}  // namespace hardcore
