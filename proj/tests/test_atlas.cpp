#include <algorithm>
#include <set>

#include "doctest.h"

#include "brickforge/atlas.hpp"
#include "brickforge/catalog.hpp"
#include "brickforge/edgeclass.hpp"
#include "brickforge/error.hpp"
#include "brickforge/matchings.hpp"
#include "brickforge/structure.hpp"
#include "brickforge/ydelta.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace brickforge;

namespace {

std::set<std::string> edge_names(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  std::set<std::string> out;
  for (EdgeId e : ids) {
    std::string a = g.vertex_name(g.edge(e).u), b = g.vertex_name(g.edge(e).v);
    if (b < a) std::swap(a, b);
    out.insert(a + "-" + b);
  }
  return out;
}

std::set<std::string> pair_names(const std::vector<NamePair>& pairs) {
  std::set<std::string> out;
  for (auto [a, b] : pairs) {
    if (b < a) std::swap(a, b);
    out.insert(a + "-" + b);
  }
  return out;
}

}  // namespace

TEST_SUITE("atlas") {

TEST_CASE("vertex counts") {
  // G8 has 16 vertices when built as G7 with one more Y->delta.
  const std::vector<std::pair<const char*, int>> sizes{
      {"K4", 4},  {"C6bar", 6}, {"Petersen", 10}, {"theta", 2}, {"W5", 6},  {"G2", 8},  {"G3", 10},
      {"G4", 10}, {"G5", 12},   {"G6", 12},       {"G7", 14},   {"G8", 16}, {"R0", 12}, {"R1", 10},
      {"R2", 12}, {"R3", 14},   {"R4", 14},       {"R5", 12},   {"R6", 14}, {"octahedron", 6}, {"K33", 6}};
  for (const auto& [name, n] : sizes) {
    CAPTURE(name);
    CHECK(named_graph(name).graph.vertex_count() == n);
  }
  CHECK(atlas_names().size() == sizes.size());
}

TEST_CASE("names and aliases") {
  CHECK(resolve_atlas_name("prism") == "C6bar");
  CHECK(resolve_atlas_name("bicorn") == "G2");
  CHECK_FALSE(resolve_atlas_name("nope"));
  CHECK(&named_graph("bicorn") == &named_graph("G2"));
  CHECK_THROWS_AS(named_graph("nope"), GraphError);
  const MultiGraph& g2 = named_graph("G2").graph;
  CHECK_THROWS_AS(edge_by_names(g2, {"v", "x"}), GraphError);
  CHECK_THROWS_AS(edge_by_names(g2, {"v", "nobody"}), GraphError);
}

TEST_CASE("named_graph examples") {
  const MultiGraph& g2 = named_graph("G2").graph;
  CHECK(is_isomorphic(g2, y_to_delta(y_to_delta(fx::k4(), 0).graph, 0).graph));
  const MultiGraph& r0 = named_graph("R0").graph;
  CHECK(r0.vertex_count() == 12);
  CHECK(triangles(r0).size() == 4);
  MultiGraph k4_again = r0;
  for (int i = 0; i < 4; ++i) k4_again = contract_triangle(k4_again, triangles(k4_again).front());
  CHECK(is_isomorphic(k4_again, fx::k4()));
  const MultiGraph& w5 = named_graph("W5").graph;
  CHECK(w5.degree(*w5.find_vertex("x")) == 5);
  CHECK(named_graph("C6bar").graph.find_vertex("vp").has_value());
}

TEST_CASE("identify") {
  CHECK(identify(fx::prism_direct()) == "C6bar");
  CHECK(identify(fx::relabel(named_graph("G5").graph, {11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0})) == "G5");
  CHECK_FALSE(identify(fx::triangle()));
}

TEST_CASE("fixtures are cubic bricks") {
  for (const std::string& name : atlas_names()) {
    if (name == "theta" || name == "W5" || name == "octahedron" || name == "K33") continue;
    CAPTURE(name);
    const MultiGraph& g = named_graph(name).graph;
    CHECK(g.is_cubic());
    CHECK(is_brick(g));
    if (g.vertex_count() <= 10) CHECK(oracle::brick(g));
  }
}

TEST_CASE("stated forcing edges are exactly the forcing edges") {
  for (const std::string& name : atlas_names()) {
    const NamedGraph& g = named_graph(name);
    if (g.stated_forcing.empty()) continue;
    CAPTURE(name);
    CHECK(edge_names(g.graph, forcing_edges(g.graph)) == pair_names(g.stated_forcing));
  }
  CHECK(named_graph("G5").stated_forcing.size() == 3);
}

TEST_CASE("stated b-invariant non-forcing edges") {
  for (const std::string& name : obstruction_graphs()) {
    const NamedGraph& g = named_graph(name);
    CAPTURE(name);
    REQUIRE_FALSE(g.stated_b_invariant_not_forcing.empty());
    const EdgeClassification r = edge_report(g.graph);
    for (const NamePair& p : g.stated_b_invariant_not_forcing) {
      const EdgeId e = edge_by_names(g.graph, p);
      CHECK(r.edges[static_cast<std::size_t>(e)].b_invariant);
      CHECK_FALSE(r.edges[static_cast<std::size_t>(e)].forcing);
    }
  }
}

TEST_CASE("theorem graphs: every b-invariant edge forcing") {
  for (const std::string& name : theorem_graphs()) {
    CAPTURE(name);
    const EdgeClassification r = edge_report(named_graph(name).graph);
    for (EdgeId e : r.b_invariant()) CHECK(r.edges[static_cast<std::size_t>(e)].forcing);
  }
  for (const char* name : {"K4", "C6bar", "Petersen"}) CHECK(edge_report(named_graph(name).graph).b_invariant().empty());
}

TEST_CASE("bicorn is the only catalog brick with one b-invariant edge") {
  std::vector<std::string> ones;
  for (const auto& e : generate_k4_based(12)) {
    if (e.edges.b_invariant().size() == 1) ones.push_back(identify(e.graph).value_or("?"));
  }
  CHECK(ones == std::vector<std::string>{"G2"});
}

}  // TEST_SUITE
