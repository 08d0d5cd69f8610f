#include "hardcore/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hardcore {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  n_ = n;
  std::vector<std::pair<int, int>> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  m_ = static_cast<int>(norm.size());

  adj_.assign(n, {});
  for (auto [u, v] : norm) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  nbr_.assign(n, VertexSubset(n));
  for (int v = 0; v < n; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    for (int u : adj_[v]) nbr_[v].set(u);
    max_degree_ = std::max(max_degree_, static_cast<int>(adj_[v].size()));
  }
}

int Graph::check(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  return v;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_independent(const VertexSubset& s) const {
  if (s.universe_size() != n_) throw std::invalid_argument("subset universe mismatch");
  bool ok = true;
  s.for_each_member([&](int v) {
    if (ok && nbr_[v].intersects(s)) ok = false;
  });
  return ok;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

VertexSubset boundary(const Graph& g, const VertexSubset& s) {
  if (s.universe_size() != g.n()) throw std::invalid_argument("subset universe mismatch");
  VertexSubset out(g.n());
  s.for_each_member([&](int v) { out |= g.neighbor_mask(v); });
  out -= s;
  return out;
}

std::int64_t vol(int delta, int t) {
  if (delta < 3) throw std::invalid_argument("vol requires delta >= 3");
  if (t < 1) throw std::invalid_argument("vol requires t >= 1");
  std::int64_t pow = 1;
  for (int i = 0; i < t; ++i) pow *= delta - 1;
  return 1 + static_cast<std::int64_t>(delta) * (pow - 1) / (delta - 2);
}

StretchResult stretch(const Graph& g, int subdivisions_per_edge) {
  if (subdivisions_per_edge < 0) throw std::invalid_argument("negative subdivision count");
  const int m = subdivisions_per_edge;
  const auto base_edges = g.edges();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(base_edges.size() * (m + 1));
  int next = g.n();
  for (auto [u, v] : base_edges) {
    int prev = u;
    for (int j = 0; j < m; ++j) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  StretchResult out{Graph(next, edges), std::vector<int>(g.n())};
  for (int v = 0; v < g.n(); ++v) out.branch_map[v] = v;
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& keep) {
  if (keep.universe_size() != g.n()) throw std::invalid_argument("subset universe mismatch");
  InducedSubgraph out;
  out.from_old.assign(g.n(), -1);
  keep.for_each_member([&](int v) {
    out.from_old[v] = static_cast<int>(out.to_old.size());
    out.to_old.push_back(v);
  });
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (out.from_old[u] >= 0 && out.from_old[v] >= 0)
      edges.emplace_back(out.from_old[u], out.from_old[v]);
  out.graph = Graph(static_cast<int>(out.to_old.size()), edges);
  return out;
}

Graph line_graph(const Graph& g) {
  const auto e = g.edges();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto [a, b] = e[i];
      auto [c, d] = e[j];
      if (a == c || a == d || b == c || b == d)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(static_cast<int>(e.size()), edges);
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<std::vector<int>> bipartite_coloring(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::deque<int> queue;
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<int> bfs_distances(const Graph& g, int v) {
  std::vector<int> dist(g.n(), -1);
  dist.at(v) = 0;
  std::deque<int> queue{v};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(x)) {
      if (dist[u] < 0) {
        dist[u] = dist[x] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

int ball_size(const Graph& g, int v, int radius) {
  auto dist = bfs_distances(g, v);
  int c = 0;
  for (int d : dist)
    if (d >= 0 && d <= radius) ++c;
  return c;
}

void write_edge_list(const Graph& g, std::ostream& os) {
  os << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
  int n = 0, m = 0;
  if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_edge_list(g, os);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_edge_list(is);
}

}  // namespace hardcore
