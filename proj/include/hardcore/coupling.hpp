#pragma once

#include "hardcore/exact.hpp"
#include "hardcore/glauber.hpp"
#include "hardcore/rng.hpp"

namespace hardcore {

// Red-blue cluster: layers L_0..L_d of the alternating BFS, rooted at v.
struct Cluster {
  int root = -1;
  VertexSubset vertices;
  std::vector<VertexSubset> layers;
};

// Alternating BFS around v: even-depth boundaries reveal blue vertices,
// odd-depth boundaries reveal red ones; every inspected boundary vertex is
// consumed whether or not it joins the cluster.
Cluster grow_cluster(const Graph& g, const VertexSubset& red,
                     const VertexSubset& blue, int v);

struct CoupledPair {
  VertexSubset red, blue;
  Cluster cluster;
};

// blue <- (blue & C) | (red - C); red is never modified.
VertexSubset rewrite_blue(const VertexSubset& red, const VertexSubset& blue,
                          const Cluster& cluster);

enum class SamplerKind { exact, chain };

// Draws (R, B) independently from the v->1 and v->0 pinned laws and applies
// the cluster rewrite to B. The exact sampler inverts the enumerated pinned
// distributions; the chain sampler runs Glauber for burn_in steps.
CoupledPair couple(const HardCore<double>& m, int v, SamplerKind kind,
                   long long burn_in, RngStream& rng);

// Law of the rewritten blue set under the exact product measure: iterates
// every (R, B) support pair. Must equal the v->0 pinned law when the
// coupling is correct.
template <class W>
Distribution<W> exact_coupling_pushforward(const HardCore<W>& m, int v,
                                           std::size_t cap = kDefaultEnumerationCap);

struct ClusterStats {
  long long replicas = 0;
  double mean_cluster_size = 0.0;
  long long max_cluster_size = 0;
  long long max_layer_width = 0;
  std::vector<long long> layer_width_histogram;  // index = width
  std::vector<long long> cluster_size_histogram; // index = |C|
};

ClusterStats cluster_statistics(const HardCore<double>& m, int v, long long replicas,
                                SamplerKind kind, long long burn_in, RngStream& rng);

// Every layer width <= 2 * vol(max(degree,3), 2t).
bool check_layer_bound(const Graph& g, int t, const Cluster& observed);

// E d_H(R, B') = E|C| under the exact coupling; upper-bounds W1 of the
// pinned pair.
template <class W>
W w1_upper_bound_exact(const HardCore<W>& m, int v,
                       std::size_t cap = kDefaultEnumerationCap);

struct MeanWithError {
  double mean = 0.0;
  double stderror = 0.0;
  long long n = 0;
};

// Monte Carlo version over coupling replicas.
MeanWithError w1_upper_bound(const HardCore<double>& m, int v, long long replicas,
                             SamplerKind kind, long long burn_in, RngStream& rng);

}  // namespace hardcore
