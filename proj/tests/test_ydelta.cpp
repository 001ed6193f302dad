#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "brickforge/atlas.hpp"
#include "brickforge/canon.hpp"
#include "brickforge/catalog.hpp"
#include "brickforge/error.hpp"
#include "brickforge/matchings.hpp"
#include "brickforge/structure.hpp"
#include "brickforge/ydelta.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace brickforge;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("no GraphError thrown");
  return ErrorKind::InternalInconsistency;
}

VertexId vertex(const MultiGraph& g, const char* name) { return *g.find_vertex(name); }

bool is_forcing(const MultiGraph& g, EdgeId e) {
  const auto f = forcing_edges(g);
  return std::binary_search(f.begin(), f.end(), e);
}

}  // namespace

TEST_SUITE("ydelta") {

TEST_CASE("y_to_delta examples") {
  for (VertexId v = 0; v < 4; ++v) CHECK(is_isomorphic(y_to_delta(fx::k4(), v).graph, fx::prism_direct()));
  const MultiGraph prism = fx::prism_direct();
  for (VertexId v = 0; v < 6; ++v) CHECK(is_isomorphic(y_to_delta(prism, v).graph, fx::atlas("G2")));
  const MultiGraph& g2 = fx::atlas("G2");
  CHECK(is_isomorphic(y_to_delta(g2, vertex(g2, "w")).graph, fx::atlas("R1")));

  CHECK(kind_of([] { y_to_delta(fx::atlas("W5"), 0); }) == ErrorKind::NotDegreeThree);
  CHECK(kind_of([] { y_to_delta(fx::theta(), 0); }) == ErrorKind::NeighborsCoincide);
}

TEST_CASE("y_to_delta correspondence") {
  const MultiGraph k4 = fx::k4();
  const YDeltaResult r = y_to_delta(k4, 0);
  const MultiGraph& h = r.graph;
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 9);
  CHECK(r.map.triangle[0] == 0);
  CHECK(r.map.triangle[1] == 4);
  CHECK(r.map.triangle[2] == 5);
  for (int i = 0; i < 3; ++i) CHECK(r.map.provenance[static_cast<std::size_t>(r.map.triangle[static_cast<std::size_t>(i)])] == 0);
  // Edge 0-y_i becomes x_i-y_i with the same id, neighbours in ascending order.
  for (EdgeId e = 0; e < 3; ++e) {
    const Edge old = k4.edge(e);
    const Edge now = h.edge(r.map.edge_map[static_cast<std::size_t>(e)]);
    const VertexId y = old.other(0);
    CHECK((now.u == y || now.v == y));
    CHECK(now.other(y) == r.map.triangle[static_cast<std::size_t>(y - 1)]);
  }
  // Edges away from the vertex keep their endpoints.
  for (EdgeId e = 3; e < 6; ++e) {
    const Edge old = k4.edge(e);
    const Edge now = h.edge(r.map.edge_map[static_cast<std::size_t>(e)]);
    CHECK(std::minmax(old.u, old.v) == std::minmax(now.u, now.v));
  }
  const auto& t = r.map.triangle;
  const auto& te = r.map.triangle_edges;
  CHECK(std::minmax(h.edge(te[0]).u, h.edge(te[0]).v) == std::minmax(t[0], t[1]));
  CHECK(std::minmax(h.edge(te[1]).u, h.edge(te[1]).v) == std::minmax(t[1], t[2]));
  CHECK(std::minmax(h.edge(te[2]).u, h.edge(te[2]).v) == std::minmax(t[0], t[2]));
}

TEST_CASE("generalized_y_to_delta") {
  const MultiGraph& oct = fx::atlas("octahedron");
  int bricks = 0;
  for (VertexId v = 0; v < oct.vertex_count(); ++v) {
    const auto splits = degree_four_splits(oct, v);
    CHECK(splits.size() == 6);
    for (const DegreeFourSplit& s : splits) {
      const MultiGraph h = generalized_y_to_delta(oct, v, s).graph;
      CHECK(h.vertex_count() == 8);
      CHECK(h.edge_count() == 15);
      CHECK(oracle::brick(h));
      bricks += is_brick(h) ? 1 : 0;
    }
  }
  CHECK(bricks == 36);

  CHECK(kind_of([] { generalized_y_to_delta(fx::k4(), 0, {0, 1, 2, 2}); }) == ErrorKind::NotDegreeFour);
  const auto inc = oct.incident(0);
  CHECK(kind_of([&] { generalized_y_to_delta(oct, 0, {inc[0], inc[0], inc[1], inc[2]}); }) == ErrorKind::InvalidSplit);
}

TEST_CASE("split admissibility") {
  // Vertex 0 with neighbours 1, 1, 2, 3 (a doubled edge to 1).
  const MultiGraph g = MultiGraph::build(4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 3}});
  // y1 = 1, y2 = 2, x3 takes {1, 3}: one coincidence across groups, allowed.
  CHECK(split_is_admissible(g, 0, {0, 2, 1, 3}));
  // x3 takes both edges to 1: y3 = y4.
  CHECK_FALSE(split_is_admissible(g, 0, {2, 3, 0, 1}));
  // x1 and x2 both on 1.
  CHECK_FALSE(split_is_admissible(g, 0, {0, 1, 2, 3}));
  for (const DegreeFourSplit& s : degree_four_splits(g, 0)) CHECK(split_is_admissible(g, 0, s));
}

TEST_CASE("contract_triangle") {
  const MultiGraph prism = fx::prism_direct();
  CHECK(is_isomorphic(contract_triangle(prism, {0, 2, 4}), fx::k4()));
  CHECK(is_isomorphic(contract_triangle(prism, {1, 3, 5}), fx::k4()));
  const MultiGraph& r0 = fx::atlas("R0");
  for (const auto& t : triangles(r0)) {
    const MultiGraph h = contract_triangle(r0, t);
    CHECK(h.vertex_count() == 10);
    CHECK(h.is_cubic());
    CHECK(is_brick(h));
  }
  CHECK(kind_of([&] { contract_triangle(prism, {0, 1, 2}); }) == ErrorKind::NotATriangle);
}

TEST_CASE("triangles") {
  CHECK(triangles(fx::k4()).size() == 4);
  CHECK(triangles(fx::atlas("Petersen")).empty());
  CHECK(triangles(fx::prism_direct()).size() == 2);
  CHECK(triangles(fx::atlas("R0")).size() == 4);
}

TEST_CASE("is_base_of") {
  CHECK(is_base_of(fx::k4(), fx::prism_direct()));
  CHECK_FALSE(is_base_of(fx::k4(), fx::atlas("Petersen")));
  CHECK(is_base_of(fx::atlas("G3"), fx::atlas("G7")));
  CHECK_FALSE(is_base_of(fx::atlas("G3"), fx::atlas("G6")));
  CHECK(is_base_of(fx::k4(), fx::k4()));  // reflexive
  CHECK(kind_of([] { is_base_of(fx::k4(), fx::atlas("W5")); }) == ErrorKind::NotCubic);
}

TEST_CASE("generate_k4_based class counts") {
  const auto entries = generate_k4_based(12, {.classify = false});
  std::map<int, std::vector<const CatalogEntry*>> by_size;
  for (const auto& e : entries) by_size[e.vertex_count].push_back(&e);
  CHECK(by_size[4].size() == 1);
  CHECK(by_size[6].size() == 1);
  CHECK(by_size[8].size() == 1);
  CHECK(by_size[10].size() == 3);
  CHECK(is_isomorphic(by_size[8][0]->graph, fx::atlas("G2")));
  std::set<std::string> ten;
  for (const auto* e : by_size[10]) ten.insert(identify(e->graph).value_or("?"));
  CHECK(ten == std::set<std::string>{"G3", "G4", "R1"});

  const auto oracle_levels = oracle::k4_based_classes(12);
  REQUIRE(oracle_levels.size() == 5);
  for (std::size_t i = 0; i < oracle_levels.size(); ++i) {
    const int n = 4 + 2 * static_cast<int>(i);
    CAPTURE(n);
    CHECK(by_size[n].size() == oracle_levels[i].size());
    // Every oracle class is matched by exactly one catalog entry.
    for (const auto& m : oracle_levels[i]) {
      int matches = 0;
      for (const auto* e : by_size[n]) matches += oracle::isomorphic(oracle::adjacency(e->graph), m) ? 1 : 0;
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("triangle contraction undoes Y->delta") {
  for (const auto& e : generate_k4_based(10, {.classify = false})) {
    for (VertexId v = 0; v < e.vertex_count; ++v) {
      const YDeltaResult r = y_to_delta(e.graph, v);
      CHECK(is_isomorphic(contract_triangle(r.graph, r.map.triangle), e.graph));
      CHECK(is_replacement_triangle(r.graph, r.map.triangle));
    }
  }
}

TEST_CASE("forcing heredity, destruction and monotonicity") {
  for (const auto& entry : generate_k4_based(10, {.classify = false})) {
    const MultiGraph& g = entry.graph;
    const auto forcing = forcing_edges(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const YDeltaResult r = y_to_delta(g, v);
      CHECK(forcing_edges(r.graph).size() <= forcing.size());
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeId mapped = r.map.edge_map[static_cast<std::size_t>(e)];
        const bool at_v = g.edge(e).u == v || g.edge(e).v == v;
        const bool was_forcing = std::binary_search(forcing.begin(), forcing.end(), e);
        if (!at_v && !was_forcing) CHECK_FALSE(is_forcing(r.graph, mapped));
        if (at_v && was_forcing) CHECK_FALSE(is_forcing(r.graph, mapped));
      }
    }
  }
}

TEST_CASE("graphs with R0 as a base are forcing-free") {
  const MultiGraph& r0 = fx::atlas("R0");
  int checked = 0;
  for (const auto& e : generate_k4_based(14, {.classify = false})) {
    if (e.vertex_count < 12 || !is_base_of(r0, e.graph)) continue;
    ++checked;
    CHECK(forcing_edges(e.graph).empty());
  }
  CHECK(checked > 1);
}

}  // TEST_SUITE
