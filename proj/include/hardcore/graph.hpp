#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardcore/vertex_subset.hpp"

namespace hardcore {

// Immutable simple undirected graph with sorted adjacency lists,
// per-vertex neighbor bitmasks and a cached maximum degree.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  int max_degree() const { return max_degree_; }
  int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
  const VertexSubset& neighbor_mask(int v) const { return nbr_[check(v)]; }

  bool has_edge(int u, int v) const { return nbr_[check(u)].test(check(v)); }

  // Normalized (u < v), lexicographically sorted edge list.
  std::vector<std::pair<int, int>> edges() const;

  bool is_independent(const VertexSubset& s) const;

 private:
  int check(int v) const;

  int n_ = 0;
  int m_ = 0;
  int max_degree_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSubset> nbr_;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Vertices outside s with at least one neighbor inside s.
VertexSubset boundary(const Graph& g, const VertexSubset& s);

// 1 + delta*((delta-1)^t - 1)/(delta-2); upper bound for a radius-t ball.
std::int64_t vol(int delta, int t);

struct StretchResult {
  Graph graph;
  std::vector<int> branch_map;  // original vertex -> id in the stretched graph
};

// Replace every edge by a path with `subdivisions_per_edge` internal vertices.
StretchResult stretch(const Graph& g, int subdivisions_per_edge);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_old;    // new id -> old id
  std::vector<int> from_old;  // old id -> new id, -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& keep);

Graph line_graph(const Graph& g);

bool is_connected(const Graph& g);

// 2-coloring with color 0 on the least vertex of every component; nullopt if odd cycle.
std::optional<std::vector<int>> bipartite_coloring(const Graph& g);

// BFS distances from v (-1 where unreachable).
std::vector<int> bfs_distances(const Graph& g, int v);

int ball_size(const Graph& g, int v, int radius);

// Edge-list text format: "n m" on the first line, then one "u v" per edge.
void write_edge_list(const Graph& g, std::ostream& os);
Graph read_edge_list(std::istream& is);
void save_edge_list(const Graph& g, const std::string& path);
Graph load_edge_list(const std::string& path);

}  // namespace hardcore
