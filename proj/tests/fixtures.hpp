#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "brickforge/atlas.hpp"
#include "brickforge/graph.hpp"

namespace fx {

using brickforge::MultiGraph;

inline const MultiGraph& atlas(const char* name) { return brickforge::named_graph(name).graph; }

inline MultiGraph k4() {
  return MultiGraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline MultiGraph theta() { return MultiGraph::build(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline MultiGraph triangle() { return MultiGraph::build(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Complement of the 6-cycle 0..5, written out directly.
inline MultiGraph prism_direct() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (j - i != 1 && j - i != 5) pairs.emplace_back(i, j);
    }
  }
  return MultiGraph::build(6, pairs);
}

inline MultiGraph k33() { return atlas("K33"); }

// Same graph with vertex i renamed perm[i] and the edge list shuffled.
inline MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  std::mt19937 rng(static_cast<unsigned>(perm.size()) * 7919U);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return MultiGraph::build(g.vertex_count(), pairs);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Loopless multigraph with n vertices and m edges.
inline MultiGraph random_multigraph(int n, int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::pair<int, int>> pairs;
  while (static_cast<int>(pairs.size()) < m) {
    const int u = pick(rng), v = pick(rng);
    if (u != v) pairs.emplace_back(u, v);
  }
  return MultiGraph::build(n, pairs);
}

}  // namespace fx
