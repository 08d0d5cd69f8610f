#pragma once

#include <optional>
#include <vector>

#include "hardcore/families.hpp"
#include "hardcore/graph.hpp"

namespace hardcore {

// Witness of an induced embedding: map[p] is the host vertex of pattern
// vertex p; pattern edges and non-edges are both preserved.
struct Embedding {
  std::vector<int> map;
};

inline constexpr int kDefaultPatternCap = 12;

// First induced embedding of `pattern` in `host` in a fixed search order,
// or nullopt. Pattern must be connected and small.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern,
                                      int pattern_cap = kDefaultPatternCap);

// Exhaustive re-check of the induced condition for a claimed embedding.
bool embedding_is_induced(const Graph& host, const Graph& pattern, const Embedding& e);

bool is_subdivided_claw_free(const Graph& g, const SubdividedClawSpec& spec);

enum class LemmaVerdict { premise_failed, confirmed, counterexample };

// Premise: connected, |V| > vol(max_degree, t+1), induced claw present.
// Conclusion searched: induced S_{1,1,t}. counterexample must never occur.
LemmaVerdict verify_claw_to_s11t(const Graph& g, int t);

// Premise: connected, bipartite, |V| > vol(max_degree, t+2), induced E present.
// Conclusion searched: induced S_{1,2,t}.
LemmaVerdict verify_e_to_s12t(const Graph& g, int t);

}  // namespace hardcore
