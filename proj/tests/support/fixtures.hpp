#pragma once

#include <string>
#include <vector>

#include "hardcore/families.hpp"
#include "hardcore/graph.hpp"

namespace hardcore::testing {

struct NamedFixture {
  std::string name;
  Graph graph;
};

Graph petersen();
Graph cube_q3();
Graph octahedron();  // line graph of K4
Graph prism();
Graph bull();
Graph paw();

// Connected claw-free graphs on <= 12 vertices (certified in tests).
std::vector<NamedFixture> claw_free_connected_fixtures();

// The general verification corpus, <= 16 vertices.
std::vector<NamedFixture> general_fixtures();

// Small state spaces for exact mixing-time work.
std::vector<NamedFixture> mixing_fixtures();

}  // namespace hardcore::testing
