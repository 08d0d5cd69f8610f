#include "hardcore/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hardcore {

SubdividedClawSpec::SubdividedClawSpec(int i_, int j_, int k_) : i(i_), j(j_), k(k_) {
  if (!(1 <= i && i <= j && j <= k))
    throw std::invalid_argument("subdivided claw spec requires 1 <= i <= j <= k");
}

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph gen_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph gen_star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dims");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, edges);
}

Graph gen_subdivided_claw(const SubdividedClawSpec& spec) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int leg : {spec.i, spec.j, spec.k}) {
    int prev = 0;
    for (int step = 0; step < leg; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, edges);
}

Graph gen_efree_block(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("block tiling needs positive dims");
  // Per block: K4 on {A,B,C,D}, right square C-E-F-G-C, top square B-H-I-J-B.
  // Gluing: F(r,c) is A(r,c+1); I(r,c) is D(r+1,c).
  enum { A, B, C, D, E, F, G, H, I, J };
  std::vector<std::vector<std::array<int, 10>>> id(rows,
      std::vector<std::array<int, 10>>(cols));
  int next = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto& b = id[r][c];
      b[A] = (c > 0) ? id[r][c - 1][F] : next++;
      b[D] = (r > 0) ? id[r - 1][c][I] : next++;
      for (int x : {B, C, E, F, G, H, I, J}) b[x] = next++;
    }
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const auto& b = id[r][c];
      for (auto [x, y] : {std::pair{A, B}, {B, C}, {C, D}, {D, A}, {A, C}, {B, D},
                          {C, E}, {E, F}, {F, G}, {G, C},
                          {B, H}, {H, I}, {I, J}, {J, B}})
        edges.emplace_back(b[x], b[y]);
    }
  return Graph(next, edges);
}

Graph gen_skewstar_witness(int path_len) {
  if (path_len < 2) throw std::invalid_argument("witness needs path_len >= 2");
  // E on vertices 0..5 (center 0; legs 1 | 2-3 | 4-5), path a=6 .. b=6+path_len.
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}};
  const int a = 6;
  for (int step = 0; step < path_len; ++step) edges.emplace_back(a + step, a + step + 1);
  for (int v = 0; v < 6; ++v) edges.emplace_back(a, v);
  return Graph(a + path_len + 1, edges);
}

Graph gen_random_cubic_bipartite(int n, RngStream& rng, int retry_budget) {
  if (n < 2) throw std::invalid_argument("part size must be >= 2");
  std::vector<int> perm(n);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    for (int matching = 0; matching < 3 && ok; ++matching) {
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(i + 1)]);
      for (int i = 0; i < n; ++i) {
        auto e = std::pair{i, n + perm[i]};
        if (!used.insert(e).second) {
          ok = false;
          break;
        }
        edges.push_back(e);
      }
    }
    if (ok) return Graph(2 * n, edges);
  }
  throw std::runtime_error("cubic bipartite generation failed (retry budget exhausted)");
}

Graph gen_random_cubic_bipartite(int n, std::uint64_t seed, int retry_budget) {
  RngStream rng(seed);
  return gen_random_cubic_bipartite(n, rng, retry_budget);
}

Graph gen_random_connected_max_degree(int n, int max_deg, double extra_edge_prob,
                                      RngStream& rng) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (max_deg < 2 && n > max_deg + 1)
    throw std::invalid_argument("degree cap too small for a connected graph");
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    // attach to a uniformly random earlier vertex with spare degree
    std::vector<int> candidates;
    for (int u = 0; u < v; ++u)
      if (deg[u] < max_deg) candidates.push_back(u);
    if (candidates.empty()) throw std::runtime_error("degree cap exhausted");
    int u = candidates[rng.next_below(static_cast<std::uint32_t>(candidates.size()))];
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (deg[u] >= max_deg || deg[v] >= max_deg) continue;
      if (rng.next_unit() < extra_edge_prob) {
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
      }
    }
  return Graph(n, edges);
}

Graph gen_random_max_degree(int n, int max_deg, double p, RngStream& rng) {
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (deg[u] >= max_deg || deg[v] >= max_deg) continue;
      if (rng.next_unit() < p) {
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
      }
    }
  return Graph(n, edges);
}

namespace {

struct Parts {
  std::vector<int> left, right;
};

Parts bipartition_or_throw(const Graph& g, int part_cap) {
  auto coloring = bipartite_coloring(g);
  if (!coloring) throw std::invalid_argument("expansion check: graph is not bipartite");
  Parts p;
  for (int v = 0; v < g.n(); ++v)
    (coloring->at(v) == 0 ? p.left : p.right).push_back(v);
  if (p.left.size() != p.right.size())
    throw std::invalid_argument("expansion check: parts are unbalanced");
  if (static_cast<int>(p.left.size()) > part_cap)
    throw std::invalid_argument("expansion check: part size exceeds brute-force cap");
  return p;
}

// Visits every nonempty subset S of `side` with |S| <= 2n/3, reporting
// (|S|, |N(S)|); returns false if the visitor rejects.
template <class F>
bool scan_side(const Graph& g, const std::vector<int>& side, F&& visit) {
  const int k = static_cast<int>(side.size());
  const int limit = (2 * k) / 3;
  std::vector<VertexSubset> masks;
  masks.reserve(k);
  for (int v : side) masks.push_back(g.neighbor_mask(v));
  for (std::uint32_t bits = 1; bits < (1u << k); ++bits) {
    const int size = std::popcount(bits);
    if (size > limit) continue;
    VertexSubset nb(g.n());
    for (int i = 0; i < k; ++i)
      if ((bits >> i) & 1) nb |= masks[i];
    if (!visit(size, nb.count())) return false;
  }
  return true;
}

}  // namespace

bool check_expansion(const Graph& g, double alpha, int part_cap) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  auto parts = bipartition_or_throw(g, part_cap);
  auto ok = [&](int size, int nb) {
    return static_cast<double>(nb) >= (1.0 + alpha) * static_cast<double>(size);
  };
  return scan_side(g, parts.left, ok) && scan_side(g, parts.right, ok);
}

std::optional<Rational> measured_expansion_alpha(const Graph& g, int part_cap) {
  auto parts = bipartition_or_throw(g, part_cap);
  std::optional<Rational> best;
  auto track = [&](int size, int nb) {
    Rational r(nb - size, size);
    if (!best || r < *best) best = r;
    return true;
  };
  scan_side(g, parts.left, track);
  scan_side(g, parts.right, track);
  return best;
}

}  // namespace hardcore
