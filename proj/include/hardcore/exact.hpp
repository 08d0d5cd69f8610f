#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/rational.hpp"
#include "hardcore/vertex_subset.hpp"

namespace hardcore {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t(1) << 22;
inline constexpr std::size_t kDefaultStateCap = 4096;

// Hard-core model: graph plus fugacity lambda > 0; wt(I) = lambda^|I|.
template <class W>
struct HardCore {
  Graph graph;
  W lambda;
  HardCore(Graph g, W l) : graph(std::move(g)), lambda(std::move(l)) {
    if (!(lambda > W(0))) throw std::invalid_argument("lambda must be positive");
  }
};

using HardCoreD = HardCore<double>;
using HardCoreQ = HardCore<Rational>;

// Finite distribution over vertex subsets; atoms in canonical order with
// positive probabilities summing to one.
template <class W>
struct Distribution {
  int universe = 0;
  std::vector<std::pair<VertexSubset, W>> atoms;
};

using Pins = std::map<int, int>;  // vertex -> 0/1

// Visits every independent set exactly once in canonical order.
// The callback receives a reference valid only during the call.
void for_each_independent_set(const Graph& g,
                              const std::function<void(const VertexSubset&)>& fn);

// Number of independent sets, stopping early at cap+1.
std::uint64_t count_independent_sets(const Graph& g,
                                     std::uint64_t cap = kDefaultEnumerationCap);

std::vector<VertexSubset> enumerate_independent_sets(
    const Graph& g, std::size_t cap = kDefaultEnumerationCap);

template <class W>
W partition_function(const HardCore<W>& m, std::size_t cap = kDefaultEnumerationCap);

template <class W>
Distribution<W> hardcore_distribution(const HardCore<W>& m,
                                      std::size_t cap = kDefaultEnumerationCap);

// Conditional law given the pins, as a distribution over full-graph subsets.
// Pinning v to 0 removes v; pinning v to 1 removes v and its neighbors, with
// v re-attached to every atom.
template <class W>
Distribution<W> pinned_distribution(const HardCore<W>& m, const Pins& pins,
                                    std::size_t cap = kDefaultEnumerationCap);

template <class W>
W marginal(const HardCore<W>& m, int v, std::size_t cap = kDefaultEnumerationCap);

template <class W>
W tv_distance(const Distribution<W>& mu, const Distribution<W>& nu);

template <class W>
void validate_distribution(const Distribution<W>& d, double slack = 1e-12);

// Graph surgery shared by pinning and the pinned chain sampler.
struct PinnedReduction {
  Graph reduced;
  std::vector<int> to_old;    // reduced id -> original id
  VertexSubset ones_mask;     // vertices pinned to 1 (original universe)
};
PinnedReduction reduce_for_pins(const Graph& g, const Pins& pins);

// Single-step Glauber kernel over the enumerated state space. Sparse rows;
// nonzero entries only between states at Hamming distance <= 1.
struct TransitionMatrix {
  std::vector<VertexSubset> states;
  std::vector<std::vector<std::pair<int, double>>> rows;
  int state_index(const VertexSubset& s) const;
};

TransitionMatrix transition_matrix(const Graph& g, double lambda,
                                   std::size_t state_cap = kDefaultStateCap);

std::vector<double> stationary_vector(const Graph& g, double lambda,
                                      const TransitionMatrix& tm);

// d(t) = max over pure starting states of TV distance to stationarity,
// for t = 0..t_end where t_end = ceil(horizon_factor * t_mix).
struct MixingProfile {
  int t_mix = -1;
  std::vector<double> d;
};

MixingProfile mixing_profile(const Graph& g, double lambda,
                             double horizon_factor = 1.0,
                             std::size_t state_cap = kDefaultStateCap,
                             int step_budget = 100000);

int exact_mixing_time(const HardCore<double>& m,
                      std::size_t state_cap = kDefaultStateCap,
                      int step_budget = 100000);

}  // namespace hardcore
