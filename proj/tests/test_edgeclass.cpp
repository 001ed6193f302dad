#include <algorithm>

#include "doctest.h"

#include "brickforge/atlas.hpp"
#include "brickforge/catalog.hpp"
#include "brickforge/edgeclass.hpp"
#include "brickforge/error.hpp"
#include "brickforge/matchings.hpp"
#include "brickforge/structure.hpp"
#include "brickforge/tightcut.hpp"
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

EdgeId named_edge(const char* graph, const char* a, const char* b) { return edge_by_names(fx::atlas(graph), {a, b}); }

// Rungs of prism_direct join an even and an odd vertex.
EdgeId prism_rung(const MultiGraph& prism) {
  for (EdgeId e = 0; e < prism.edge_count(); ++e) {
    if ((prism.edge(e).u + prism.edge(e).v) % 2 == 1) return e;
  }
  return -1;
}

std::vector<std::string> labels(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<std::string> out;
  for (EdgeId e : ids) out.push_back(g.edge_label(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("edgeclass") {

TEST_CASE("is_removable") {
  const MultiGraph k4 = fx::k4();
  for (EdgeId e = 0; e < 6; ++e) {
    CHECK_FALSE(is_removable(k4, e));
    CHECK_FALSE(oracle::matching_covered(delete_edge(k4, e).graph));
  }
  for (EdgeId e = 0; e < 3; ++e) CHECK(is_removable(fx::theta(), e));
  CHECK(is_removable(fx::atlas("G2"), named_edge("G2", "u", "up")));
  const MultiGraph path = MultiGraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(kind_of([&] { is_removable(path, 0); }) == ErrorKind::NotMatchingCovered);
}

TEST_CASE("is_b_invariant") {
  for (EdgeId e = 0; e < 6; ++e) CHECK_FALSE(is_b_invariant(fx::k4(), e));
  const MultiGraph& g2 = fx::atlas("G2");
  int count = 0;
  for (EdgeId e = 0; e < g2.edge_count(); ++e) count += is_b_invariant(g2, e) ? 1 : 0;
  CHECK(count == 1);
  CHECK(is_b_invariant(g2, named_edge("G2", "u", "up")));
  CHECK(is_b_invariant(fx::atlas("R1"), named_edge("R1", "v", "vp")));
  CHECK(is_b_invariant(fx::atlas("R1"), named_edge("R1", "u", "up")));
}

TEST_CASE("bicontract") {
  const MultiGraph prism = fx::prism_direct();
  const EdgeId rung = prism_rung(prism);
  const MultiGraph cut = delete_edge(prism, rung).graph;
  const VertexId end = prism.edge(rung).u;
  CHECK(is_isomorphic(bicontract(cut, end), delete_edge(fx::k4(), 0).graph));

  const MultiGraph path = MultiGraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  const MultiGraph p = bicontract(path, 1);
  CHECK(p.vertex_count() == 2);
  CHECK(p.edge_count() == 1);

  CHECK(kind_of([] { bicontract(fx::k4(), 0); }) == ErrorKind::NotDegreeTwo);
  const MultiGraph doubled = MultiGraph::build(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}});
  CHECK(kind_of([&] { bicontract(doubled, 0); }) == ErrorKind::NeighborsCoincide);
  CHECK(kind_of([] { bicontract(MultiGraph::build(3, {{0, 1}, {1, 2}}), 1); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("retract") {
  const MultiGraph prism = fx::prism_direct();
  const MultiGraph r = retract(delete_edge(prism, prism_rung(prism)).graph);
  CHECK(r.vertex_count() == 2);
  CHECK(r.multiplicity(0, 1) == 2);

  const MultiGraph& g2 = fx::atlas("G2");
  CHECK(is_brick(retract(delete_edge(g2, named_edge("G2", "u", "up")).graph)));

  CHECK(retract(fx::atlas("Petersen")) == fx::atlas("Petersen"));
  CHECK(kind_of([] { retract(MultiGraph::build(1, {})); }) == ErrorKind::Degenerate);
  CHECK(kind_of([] { retract(MultiGraph::build(2, {})); }) == ErrorKind::Degenerate);
}

TEST_CASE("retract order does not change the brick verdict") {
  for (const auto& entry : generate_k4_based(12, {.classify = false})) {
    for (EdgeId e = 0; e < entry.graph.edge_count(); ++e) {
      const MultiGraph h = delete_edge(entry.graph, e).graph;
      if (!is_matching_covered(h)) continue;
      const MultiGraph a = retract(h);
      const MultiGraph b = retract_highest_first(h);
      CHECK(a.vertex_count() == b.vertex_count());
      CHECK((a.vertex_count() >= 4 && is_brick(a)) == (b.vertex_count() >= 4 && is_brick(b)));
    }
  }
}

TEST_CASE("is_thin") {
  CHECK(is_thin(fx::atlas("G2"), named_edge("G2", "u", "up")));
  for (EdgeId e = 0; e < 6; ++e) CHECK_FALSE(is_thin(fx::k4(), e));
  const MultiGraph prism = fx::prism_direct();
  CHECK_FALSE(is_thin(prism, prism_rung(prism)));
  CHECK(kind_of([] { is_thin(fx::k33(), 0); }) == ErrorKind::NotABrick);
}

TEST_CASE("retract modes differ on R2") {
  // The multigraph retract of R2 - v1p v2p keeps a doubled edge and is not a
  // brick; collapsing parallels first yields a brick.
  const MultiGraph& r2 = fx::atlas("R2");
  const EdgeId e = named_edge("R2", "v1p", "v2p");
  CHECK(is_b_invariant(r2, e));
  CHECK_FALSE(is_thin(r2, e, RetractMode::KeepParallel));
  CHECK(is_thin(r2, e, RetractMode::CollapseParallel));
  const MultiGraph kept = retract(delete_edge(r2, e).graph);
  CHECK(vertex_connectivity(kept) < 3);
}

TEST_CASE("find_pyramids") {
  const MultiGraph& r1 = fx::atlas("R1");
  std::vector<std::string> bottoms;
  for (const Pyramid& p : find_pyramids(r1)) bottoms.push_back(r1.edge_label(p.bottom));
  CHECK(std::count(bottoms.begin(), bottoms.end(), "v-vp") + std::count(bottoms.begin(), bottoms.end(), "vp-v") > 0);
  CHECK(std::count(bottoms.begin(), bottoms.end(), "u-up") + std::count(bottoms.begin(), bottoms.end(), "up-u") > 0);

  const MultiGraph& g5 = fx::atlas("G5");
  const EdgeId vpw = named_edge("G5", "vp", "w");
  const auto g5p = find_pyramids(g5);
  CHECK(std::any_of(g5p.begin(), g5p.end(), [&](const Pyramid& p) { return p.bottom == vpw; }));

  CHECK(find_pyramids(fx::k4()).empty());

  for (const Pyramid& p : g5p) {
    CHECK(p.edges.size() == 6);
    CHECK(g5.adjacent(p.apex, p.left));
    CHECK(g5.adjacent(p.apex, p.right));
    CHECK(g5.adjacent(p.left, p.right));
    CHECK(g5.adjacent(p.left, p.y));
    CHECK(g5.adjacent(p.right, p.z));
    CHECK(g5.adjacent(p.y, p.z));
  }
}

TEST_CASE("is_extremal") {
  for (const char* name : {"K4", "theta", "Petersen", "C6bar", "G2", "G3", "G4", "G5", "G6", "G7", "G8"}) {
    CAPTURE(name);
    CHECK(is_extremal(fx::atlas(name)));
  }
  const MultiGraph k33 = fx::k33();
  CHECK_FALSE(is_extremal(k33));
  CHECK(count_perfect_matchings(k33) == 6);
  CHECK(matching_lattice_rank(k33) == 5);
  CHECK(oracle::matching_rank(k33) == 5);
  CHECK(kind_of([] { is_extremal(MultiGraph::build(4, {{0, 1}, {1, 2}, {2, 3}})); }) == ErrorKind::NotMatchingCovered);
}

TEST_CASE("rational rank equals fraction-free rank on the atlas") {
  for (const std::string& name : atlas_names()) {
    CAPTURE(name);
    const MultiGraph& g = fx::atlas(name.c_str());
    CHECK(matching_lattice_rank(g) == oracle::matching_rank(g));
  }
}

TEST_CASE("edge_report examples") {
  const EdgeClassification k4 = edge_report(fx::k4());
  CHECK(k4.forcing().size() == 6);
  CHECK(k4.removable().empty());
  CHECK(k4.b_invariant().empty());
  CHECK(k4.thin().empty());

  const MultiGraph& g2 = fx::atlas("G2");
  const EdgeClassification bicorn = edge_report(g2);
  REQUIRE(bicorn.b_invariant().size() == 1);
  CHECK(bicorn.edges[static_cast<std::size_t>(bicorn.b_invariant()[0])].forcing);
  CHECK(labels(g2, bicorn.b_invariant()) == std::vector<std::string>{"u-up"});

  CHECK(edge_report(fx::atlas("R0")).forcing().empty());
  CHECK(kind_of([] { edge_report(fx::k33()); }) == ErrorKind::NotABrick);

  const auto j = to_json(g2, bicorn);
  CHECK(j.at("summary").at("b_invariant") == 1);
  CHECK(to_markdown(g2, bicorn).find("| u-up |") != std::string::npos);
}

TEST_CASE("flags agree with the predicates and the oracles") {
  std::vector<MultiGraph> bricks;
  for (const auto& e : generate_k4_based(10, {.classify = false})) bricks.push_back(e.graph);
  for (const char* name : {"Petersen", "W5", "octahedron"}) bricks.push_back(fx::atlas(name));
  for (const MultiGraph& g : bricks) {
    const EdgeClassification r = edge_report(g);
    const auto pms = oracle::perfect_matchings(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const EdgeFlags& f = r.edges[static_cast<std::size_t>(e)];
      const auto in = std::count_if(pms.begin(), pms.end(),
                                    [&](const auto& m) { return std::find(m.begin(), m.end(), e) != m.end(); });
      CHECK(f.pm_count == in);
      CHECK(f.removable == is_removable(g, e));
      CHECK(f.removable == oracle::matching_covered(delete_edge(g, e).graph));
      CHECK(f.b_invariant == is_b_invariant(g, e));
      CHECK(f.thin == is_thin(g, e));
      if (f.thin) CHECK(f.b_invariant);
      if (f.b_invariant) CHECK(f.removable);
      if (f.forcing) CHECK((f.pm_count == 1 && f.in_some_pm));
    }
  }
}

TEST_CASE("pyramid bottoms are b-invariant in K4-based graphs") {
  int seen = 0;
  for (const auto& e : generate_k4_based(12)) {
    if (e.vertex_count < 8) continue;
    for (const Pyramid& p : find_pyramids(e.graph)) {
      ++seen;
      CHECK(e.edges.edges[static_cast<std::size_t>(p.bottom)].b_invariant);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("extremal iff every b-invariant edge forcing, catalog up to 12") {
  for (const auto& e : generate_k4_based(12)) {
    bool all = true;
    for (EdgeId id : e.edges.b_invariant()) all = all && e.edges.edges[static_cast<std::size_t>(id)].forcing;
    CHECK(is_extremal(e.graph) == all);
  }
}

}  // TEST_SUITE
