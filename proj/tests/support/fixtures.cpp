#include "fixtures.hpp"

#include "hardcore/rng.hpp"

namespace hardcore::testing {

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);        // outer cycle
    e.emplace_back(i, i + 5);              // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // pentagram
  }
  return Graph(10, e);
}

Graph cube_q3() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
  return Graph(8, e);
}

Graph octahedron() { return line_graph(gen_complete(4)); }

Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph bull() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}}); }

Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }

std::vector<NamedFixture> claw_free_connected_fixtures() {
  std::vector<NamedFixture> out;
  for (int n : {2, 3, 4, 5, 7, 10, 12})
    out.push_back({"path" + std::to_string(n), gen_path(n)});
  for (int n : {3, 4, 5, 6, 9, 12})
    out.push_back({"cycle" + std::to_string(n), gen_cycle(n)});
  out.push_back({"K4", gen_complete(4)});
  out.push_back({"K5", gen_complete(5)});
  out.push_back({"paw", paw()});
  out.push_back({"bull", bull()});
  out.push_back({"L(K4)", octahedron()});
  out.push_back({"L(K33)", line_graph(Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                                {1, 5}, {2, 3}, {2, 4}, {2, 5}}))});
  out.push_back({"L(prism)", line_graph(prism())});
  return out;
}

std::vector<NamedFixture> general_fixtures() {
  std::vector<NamedFixture> out;
  out.push_back({"K1", gen_path(1)});
  out.push_back({"edge", gen_path(2)});
  for (int n : {3, 4, 5, 8, 12, 16})
    out.push_back({"path" + std::to_string(n), gen_path(n)});
  for (int n : {3, 5, 6, 9, 14})
    out.push_back({"cycle" + std::to_string(n), gen_cycle(n)});
  out.push_back({"claw", gen_subdivided_claw({1, 1, 1})});
  out.push_back({"fork", gen_subdivided_claw({1, 1, 2})});
  out.push_back({"E", gen_subdivided_claw({1, 2, 2})});
  out.push_back({"skew-star", gen_subdivided_claw({1, 2, 3})});
  out.push_back({"S222", gen_subdivided_claw({2, 2, 2})});
  out.push_back({"star5", gen_star(5)});
  out.push_back({"K33", Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                  {2, 3}, {2, 4}, {2, 5}})});
  out.push_back({"K4", gen_complete(4)});
  out.push_back({"K5", gen_complete(5)});
  out.push_back({"petersen", petersen()});
  out.push_back({"cube", cube_q3()});
  out.push_back({"grid3x4", gen_grid(3, 4)});
  out.push_back({"grid4x4", gen_grid(4, 4)});
  out.push_back({"block1x1", gen_efree_block(1, 1)});
  out.push_back({"witness2", gen_skewstar_witness(2)});
  out.push_back({"bull", bull()});
  out.push_back({"paw", paw()});
  {
    RngStream rng(20240811);
    for (int n : {14, 15, 16}) {
      auto g = gen_random_connected_max_degree(n, 4, 0.12, rng);
      out.push_back({"rand" + std::to_string(n), std::move(g)});
    }
  }
  return out;
}

std::vector<NamedFixture> mixing_fixtures() {
  std::vector<NamedFixture> out;
  out.push_back({"K1", gen_path(1)});
  out.push_back({"edge", gen_path(2)});
  out.push_back({"path3", gen_path(3)});
  out.push_back({"claw", gen_subdivided_claw({1, 1, 1})});
  out.push_back({"cycle5", gen_cycle(5)});
  out.push_back({"star4", gen_star(4)});
  out.push_back({"K5", gen_complete(5)});
  out.push_back({"grid3x3", gen_grid(3, 3)});
  out.push_back({"path8", gen_path(8)});
  out.push_back({"cycle9", gen_cycle(9)});
  out.push_back({"petersen", petersen()});
  out.push_back({"path12", gen_path(12)});
  out.push_back({"cycle14", gen_cycle(14)});
  return out;
}

}  // namespace hardcore::testing
