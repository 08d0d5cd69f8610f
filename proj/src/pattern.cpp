#include "hardcore/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardcore {

namespace {

// Pattern vertex order: most-constrained-first. Starts at the max-degree
// vertex and always extends with a vertex adjacent to the ordered prefix
// (pattern is connected), preferring many placed neighbors, then high
// degree, then low id.
std::vector<int> pattern_order(const Graph& p) {
  const int k = p.n();
  std::vector<int> order;
  std::vector<char> placed(k, 0);
  int start = 0;
  for (int v = 1; v < k; ++v)
    if (p.degree(v) > p.degree(start)) start = v;
  order.push_back(start);
  placed[start] = 1;
  while (static_cast<int>(order.size()) < k) {
    int best = -1, best_anchors = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int anchors = 0;
      for (int u : p.neighbors(v)) anchors += placed[u];
      if (anchors == 0) continue;
      if (best < 0 || anchors > best_anchors ||
          (anchors == best_anchors &&
           (p.degree(v) > p.degree(best) ||
            (p.degree(v) == p.degree(best) && v < best)))) {
        best = v;
        best_anchors = anchors;
      }
    }
    if (best < 0) throw std::invalid_argument("pattern must be connected");
    order.push_back(best);
    placed[best] = 1;
  }
  return order;
}

struct Searcher {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;       // pattern vertices in assignment order
  std::vector<int> anchor;      // index into order of an already-placed neighbor
  std::vector<int> map;         // pattern vertex -> host vertex (-1 unset)
  VertexSubset used;

  Searcher(const Graph& h, const Graph& p)
      : host(h), pattern(p), order(pattern_order(p)),
        anchor(p.n(), -1), map(p.n(), -1), used(h.n()) {
    for (std::size_t d = 1; d < order.size(); ++d) {
      for (std::size_t e = 0; e < d; ++e)
        if (pattern.has_edge(order[d], order[e])) {
          anchor[d] = static_cast<int>(e);
          break;
        }
    }
  }

  bool feasible(int pv, int hv) const {
    if (used.test(hv)) return false;
    if (host.degree(hv) < pattern.degree(pv)) return false;
    for (int q = 0; q < pattern.n(); ++q) {
      if (map[q] < 0) continue;
      if (pattern.has_edge(pv, q) != host.has_edge(hv, map[q])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int pv = order[depth];
    if (depth == 0) {
      for (int hv = 0; hv < host.n(); ++hv)
        if (feasible(pv, hv) && place(pv, hv, depth)) return true;
      return false;
    }
    const int anchor_host = map[order[anchor[depth]]];
    for (int hv : host.neighbors(anchor_host))
      if (feasible(pv, hv) && place(pv, hv, depth)) return true;
    return false;
  }

  bool place(int pv, int hv, std::size_t depth) {
    map[pv] = hv;
    used.set(hv);
    if (extend(depth + 1)) return true;
    map[pv] = -1;
    used.reset(hv);
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern,
                                      int pattern_cap) {
  if (pattern.n() < 1) throw std::invalid_argument("empty pattern");
  if (pattern.n() > pattern_cap) throw std::invalid_argument("pattern exceeds size cap");
  if (pattern.n() > host.n()) return std::nullopt;
  Searcher s(host, pattern);
  if (!s.extend(0)) return std::nullopt;
  Embedding e{s.map};
  if (!embedding_is_induced(host, pattern, e))
    throw std::logic_error("internal error: embedding failed the induced re-check");
  return e;
}

bool embedding_is_induced(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.n()) return false;
  for (int a = 0; a < pattern.n(); ++a) {
    if (e.map[a] < 0 || e.map[a] >= host.n()) return false;
    for (int b = a + 1; b < pattern.n(); ++b) {
      if (e.map[a] == e.map[b]) return false;
      if (pattern.has_edge(a, b) != host.has_edge(e.map[a], e.map[b])) return false;
    }
  }
  return true;
}

bool is_subdivided_claw_free(const Graph& g, const SubdividedClawSpec& spec) {
  return !find_induced(g, gen_subdivided_claw(spec),
                       std::max(kDefaultPatternCap, spec.i + spec.j + spec.k + 1))
              .has_value();
}

LemmaVerdict verify_claw_to_s11t(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (!is_connected(g)) return LemmaVerdict::premise_failed;
  if (!find_induced(g, gen_subdivided_claw({1, 1, 1}))) return LemmaVerdict::premise_failed;
  // A claw forces max degree >= 3, so vol is well defined here.
  if (g.n() <= vol(g.max_degree(), t + 1)) return LemmaVerdict::premise_failed;
  return find_induced(g, gen_subdivided_claw({1, 1, t}), t + 3)
             ? LemmaVerdict::confirmed
             : LemmaVerdict::counterexample;
}

LemmaVerdict verify_e_to_s12t(const Graph& g, int t) {
  if (t < 3) throw std::invalid_argument("t must be >= 3");
  if (!is_connected(g)) return LemmaVerdict::premise_failed;
  if (!bipartite_coloring(g)) return LemmaVerdict::premise_failed;
  if (!find_induced(g, gen_subdivided_claw({1, 2, 2}))) return LemmaVerdict::premise_failed;
  if (g.n() <= vol(g.max_degree(), t + 2)) return LemmaVerdict::premise_failed;
  return find_induced(g, gen_subdivided_claw({1, 2, t}), t + 4)
             ? LemmaVerdict::confirmed
             : LemmaVerdict::counterexample;
}

}  // namespace hardcore
