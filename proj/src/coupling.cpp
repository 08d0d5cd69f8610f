#include "hardcore/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hardcore {

Cluster grow_cluster(const Graph& g, const VertexSubset& red,
                     const VertexSubset& blue, int v) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
  if (!red.test(v)) throw std::invalid_argument("root vertex must be red");

  Cluster c;
  c.root = v;
  c.vertices = VertexSubset(g.n());
  VertexSubset layer(g.n());
  layer.set(v);
  VertexSubset unprocessed = VertexSubset::full(g.n());
  unprocessed.reset(v);

  int depth = 0;
  while (!layer.none()) {
    c.vertices |= layer;
    c.layers.push_back(layer);
    VertexSubset frontier = boundary(g, layer);
    frontier &= unprocessed;               // N = U cap boundary(L_d)
    unprocessed -= frontier;               // consumed, colored or not
    VertexSubset next = frontier;
    next &= (depth % 2 == 0) ? blue : red; // even reveals blue, odd red
    layer = std::move(next);
    ++depth;
  }
  return c;
}

VertexSubset rewrite_blue(const VertexSubset& red, const VertexSubset& blue,
                          const Cluster& cluster) {
  VertexSubset inside = blue;
  inside &= cluster.vertices;
  VertexSubset outside = red;
  outside -= cluster.vertices;
  return inside | outside;
}

namespace {

// Inverse-CDF sampler over a double-weighted distribution.
struct DistSampler {
  const Distribution<double>* dist;
  std::vector<double> cumulative;

  explicit DistSampler(const Distribution<double>& d) : dist(&d) {
    cumulative.reserve(d.atoms.size());
    double acc = 0.0;
    for (const auto& [s, p] : d.atoms) {
      acc += p;
      cumulative.push_back(acc);
    }
  }

  const VertexSubset& draw(RngStream& rng) const {
    const double u = rng.next_unit() * cumulative.back();
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return dist->atoms[it - cumulative.begin()].first;
  }
};

struct PairSampler {
  const HardCore<double>& m;
  int v;
  SamplerKind kind;
  long long burn_in;
  std::optional<Distribution<double>> d1, d0;
  std::optional<DistSampler> s1, s0;

  PairSampler(const HardCore<double>& model, int vertex, SamplerKind k, long long burn)
      : m(model), v(vertex), kind(k), burn_in(burn) {
    if (kind == SamplerKind::exact) {
      d1 = pinned_distribution(m, Pins{{v, 1}});
      d0 = pinned_distribution(m, Pins{{v, 0}});
      s1.emplace(*d1);
      s0.emplace(*d0);
    }
  }

  std::pair<VertexSubset, VertexSubset> draw(RngStream& rng) const {
    if (kind == SamplerKind::exact) return {s1->draw(rng), s0->draw(rng)};
    VertexSubset red = sample_stationary(m, Pins{{v, 1}}, burn_in, rng);
    VertexSubset blue = sample_stationary(m, Pins{{v, 0}}, burn_in, rng);
    return {std::move(red), std::move(blue)};
  }
};

}  // namespace

CoupledPair couple(const HardCore<double>& m, int v, SamplerKind kind,
                   long long burn_in, RngStream& rng) {
  PairSampler sampler(m, v, kind, burn_in);
  auto [red, blue] = sampler.draw(rng);
  CoupledPair out;
  out.cluster = grow_cluster(m.graph, red, blue, v);
  out.blue = rewrite_blue(red, blue, out.cluster);
  out.red = std::move(red);
  return out;
}

template <class W>
Distribution<W> exact_coupling_pushforward(const HardCore<W>& m, int v,
                                           std::size_t cap) {
  const auto d1 = pinned_distribution(m, Pins{{v, 1}}, cap);
  const auto d0 = pinned_distribution(m, Pins{{v, 0}}, cap);
  std::map<VertexSubset, W, CanonicalLess> law;
  for (const auto& [red, pr] : d1.atoms) {
    for (const auto& [blue, pb] : d0.atoms) {
      const Cluster c = grow_cluster(m.graph, red, blue, v);
      VertexSubset out = rewrite_blue(red, blue, c);
      law[std::move(out)] += pr * pb;
    }
  }
  Distribution<W> d;
  d.universe = m.graph.n();
  d.atoms.assign(law.begin(), law.end());
  return d;
}

ClusterStats cluster_statistics(const HardCore<double>& m, int v, long long replicas,
                                SamplerKind kind, long long burn_in, RngStream& rng) {
  if (replicas < 1) throw std::invalid_argument("need at least one replica");
  PairSampler sampler(m, v, kind, burn_in);
  ClusterStats st;
  st.replicas = replicas;
  double total = 0.0;
  for (long long r = 0; r < replicas; ++r) {
    auto [red, blue] = sampler.draw(rng);
    const Cluster c = grow_cluster(m.graph, red, blue, v);
    const long long size = c.vertices.count();
    total += static_cast<double>(size);
    st.max_cluster_size = std::max(st.max_cluster_size, size);
    if (static_cast<std::size_t>(size) >= st.cluster_size_histogram.size())
      st.cluster_size_histogram.resize(size + 1, 0);
    ++st.cluster_size_histogram[size];
    for (const auto& layer : c.layers) {
      const long long w = layer.count();
      st.max_layer_width = std::max(st.max_layer_width, w);
      if (static_cast<std::size_t>(w) >= st.layer_width_histogram.size())
        st.layer_width_histogram.resize(w + 1, 0);
      ++st.layer_width_histogram[w];
    }
  }
  st.mean_cluster_size = total / static_cast<double>(replicas);
  return st;
}

bool check_layer_bound(const Graph& g, int t, const Cluster& observed) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  // vol needs delta >= 3; smaller degrees only shrink the true ball.
  const std::int64_t bound = 2 * vol(std::max(g.max_degree(), 3), 2 * t);
  for (const auto& layer : observed.layers)
    if (layer.count() > bound) return false;
  return true;
}

template <class W>
W w1_upper_bound_exact(const HardCore<W>& m, int v, std::size_t cap) {
  const auto d1 = pinned_distribution(m, Pins{{v, 1}}, cap);
  const auto d0 = pinned_distribution(m, Pins{{v, 0}}, cap);
  W acc(0);
  for (const auto& [red, pr] : d1.atoms)
    for (const auto& [blue, pb] : d0.atoms) {
      const Cluster c = grow_cluster(m.graph, red, blue, v);
      acc += pr * pb * W(c.vertices.count());
    }
  return acc;
}

MeanWithError w1_upper_bound(const HardCore<double>& m, int v, long long replicas,
                             SamplerKind kind, long long burn_in, RngStream& rng) {
  if (replicas < 1) throw std::invalid_argument("need at least one replica");
  PairSampler sampler(m, v, kind, burn_in);
  double sum = 0.0, sum_sq = 0.0;
  for (long long r = 0; r < replicas; ++r) {
    auto [red, blue] = sampler.draw(rng);
    const Cluster c = grow_cluster(m.graph, red, blue, v);
    const VertexSubset rewritten = rewrite_blue(red, blue, c);
    const double d = static_cast<double>(red.hamming_distance(rewritten));
    sum += d;
    sum_sq += d * d;
  }
  MeanWithError out;
  out.n = replicas;
  out.mean = sum / static_cast<double>(replicas);
  const double var =
      std::max(0.0, sum_sq / replicas - out.mean * out.mean);
  out.stderror = replicas > 1 ? std::sqrt(var / (replicas - 1)) : 0.0;
  return out;
}

template Distribution<double> exact_coupling_pushforward<double>(const HardCore<double>&, int, std::size_t);
template Distribution<Rational> exact_coupling_pushforward<Rational>(const HardCore<Rational>&, int, std::size_t);
template double w1_upper_bound_exact<double>(const HardCore<double>&, int, std::size_t);
template Rational w1_upper_bound_exact<Rational>(const HardCore<Rational>&, int, std::size_t);

}  // namespace hardcore
