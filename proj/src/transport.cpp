#include "hardcore/transport.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace hardcore {

namespace {

struct Problem {
  std::vector<VertexSubset> row_atoms, col_atoms;
  std::vector<Rational> supply, demand;
  std::vector<int> row_origin, col_origin;  // indices into mu / nu atoms
};

// Cancel mass shared on identical atoms: with a metric ground cost there is
// an optimal plan that never moves it.
Problem reduce(const Distribution<Rational>& mu, const Distribution<Rational>& nu) {
  Problem p;
  std::size_t i = 0, j = 0;
  auto take_row = [&](const Rational& mass) {
    p.row_atoms.push_back(mu.atoms[i].first);
    p.supply.push_back(mass);
    p.row_origin.push_back(static_cast<int>(i));
  };
  auto take_col = [&](const Rational& mass) {
    p.col_atoms.push_back(nu.atoms[j].first);
    p.demand.push_back(mass);
    p.col_origin.push_back(static_cast<int>(j));
  };
  while (i < mu.atoms.size() || j < nu.atoms.size()) {
    int c;
    if (j == nu.atoms.size()) c = -1;
    else if (i == mu.atoms.size()) c = 1;
    else c = VertexSubset::compare(mu.atoms[i].first, nu.atoms[j].first);
    if (c < 0) {
      take_row(mu.atoms[i].second);
      ++i;
    } else if (c > 0) {
      take_col(nu.atoms[j].second);
      ++j;
    } else {
      const Rational& a = mu.atoms[i].second;
      const Rational& b = nu.atoms[j].second;
      if (a > b) take_row(a - b);
      else if (b > a) take_col(b - a);
      ++i;
      ++j;
    }
  }
  return p;
}

}  // namespace

TransportPlan solve_w1_hamming(const Distribution<Rational>& mu,
                               const Distribution<Rational>& nu,
                               std::size_t support_cap) {
  if (mu.universe != nu.universe)
    throw std::invalid_argument("distributions over different universes");
  if (mu.atoms.size() + nu.atoms.size() > support_cap)
    throw CapExceeded("transport support exceeds cap");

  Problem p = reduce(mu, nu);
  const int m = static_cast<int>(p.row_atoms.size());
  const int n = static_cast<int>(p.col_atoms.size());
  TransportPlan plan;
  plan.cost = 0;
  if (m == 0 && n == 0) return plan;
  if (m == 0 || n == 0)
    throw std::invalid_argument("unbalanced transport problem (masses differ)");

  std::vector<std::vector<int>> cost(m, std::vector<int>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      cost[i][j] = p.row_atoms[i].hamming_distance(p.col_atoms[j]);

  std::vector<std::map<int, Rational>> flow(m);        // row -> (col -> mass)
  std::vector<std::vector<int>> rows_into(n);          // col -> rows with flow
  auto note_backward = [&](int i, int j, bool present) {
    auto& v = rows_into[j];
    auto it = std::find(v.begin(), v.end(), i);
    if (present && it == v.end()) v.push_back(i);
    if (!present && it != v.end()) v.erase(it);
  };

  std::vector<Rational> supply_left = p.supply, demand_left = p.demand;
  // Node potentials: reduced cost of i->j is c_ij + pot[i] - pot[m+j] >= 0.
  std::vector<long long> pot(m + n, 0);
  const long long inf = std::numeric_limits<long long>::max() / 4;

  std::vector<long long> dist(m + n);
  std::vector<int> parent(m + n);
  std::vector<char> done(m + n);

  int source = 0;
  const int round_guard = 50 * (m + n) + 2000;
  int rounds = 0;
  for (;;) {
    while (source < m && supply_left[source] == 0) ++source;
    if (source == m) break;
    if (++rounds > round_guard)
      throw std::runtime_error("transport solver failed to converge (internal bug)");

    // Dijkstra from `source` on reduced costs (dense; costs are integers).
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    dist[source] = 0;
    for (;;) {
      int best = -1;
      long long bd = inf;
      for (int x = 0; x < m + n; ++x)
        if (!done[x] && dist[x] < bd) {
          bd = dist[x];
          best = x;
        }
      if (best < 0) break;
      done[best] = 1;
      if (best < m) {
        const int i = best;
        for (int j = 0; j < n; ++j) {
          const long long rc = cost[i][j] + pot[i] - pot[m + j];
          if (dist[i] + rc < dist[m + j]) {
            dist[m + j] = dist[i] + rc;
            parent[m + j] = i;
          }
        }
      } else {
        const int j = best - m;
        for (int i : rows_into[j]) {
          const long long rc = -cost[i][j] + pot[m + j] - pot[i];
          if (dist[m + j] + rc < dist[i]) {
            dist[i] = dist[m + j] + rc;
            parent[i] = m + j;
          }
        }
      }
    }

    int target = -1;
    long long td = inf;
    for (int j = 0; j < n; ++j)
      if (demand_left[j] > 0 && dist[m + j] < td) {
        td = dist[m + j];
        target = j;
      }
    if (target < 0)
      throw std::runtime_error("transport: no augmenting path (masses inconsistent)");

    // Path from target back to source; arc parent[x] -> x.
    std::vector<int> path{m + target};
    while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);

    Rational delta = std::min(supply_left[source], demand_left[target]);
    for (std::size_t idx = 0; idx + 1 < path.size(); ++idx) {
      const int y = path[idx], x = path[idx + 1];
      if (x >= m) delta = std::min(delta, flow[y].at(x - m));  // undoing col->row
    }

    for (std::size_t idx = 0; idx + 1 < path.size(); ++idx) {
      const int y = path[idx], x = path[idx + 1];
      if (x < m) {
        const int i = x, j = y - m;
        auto [it, fresh] = flow[i].try_emplace(j, Rational(0));
        it->second += delta;
        if (fresh) note_backward(i, j, true);
      } else {
        const int i = y, j = x - m;
        auto it = flow[i].find(j);
        it->second -= delta;
        if (it->second == 0) {
          flow[i].erase(it);
          note_backward(i, j, false);
        }
      }
    }
    supply_left[source] -= delta;
    demand_left[target] -= delta;

    // Johnson update; keeps every residual reduced cost nonnegative.
    // Unreached nodes shift by td (no residual arc can leave them here).
    for (int x = 0; x < m + n; ++x) pot[x] += std::min(dist[x], td);
  }

  for (int i = 0; i < m; ++i)
    for (auto& [j, f] : flow[i]) {
      plan.cost += f * cost[i][j];
      plan.flows.push_back(TransportFlow{p.row_origin[i], p.col_origin[j], f});
    }
  return plan;
}

template <>
Rational exact_w1_hamming<Rational>(const Distribution<Rational>& mu,
                                    const Distribution<Rational>& nu,
                                    std::size_t support_cap) {
  return solve_w1_hamming(mu, nu, support_cap).cost;
}

template <>
double exact_w1_hamming<double>(const Distribution<double>& mu,
                                const Distribution<double>& nu,
                                std::size_t support_cap) {
  auto lift = [](const Distribution<double>& d) {
    Distribution<Rational> out;
    out.universe = d.universe;
    Rational total(0);
    out.atoms.reserve(d.atoms.size());
    for (const auto& [s, p] : d.atoms) {
      Rational q = rational_from_double(p);
      out.atoms.emplace_back(s, q);
      total += q;
    }
    if (total <= 0) throw std::invalid_argument("distribution has no mass");
    for (auto& [s, q] : out.atoms) q /= total;
    return out;
  };
  return static_cast<double>(solve_w1_hamming(lift(mu), lift(nu), support_cap).cost);
}

}  // namespace hardcore
