#include "brickforge/atlas.hpp"

#include <map>
#include <unordered_map>

#include "brickforge/canon.hpp"
#include "brickforge/error.hpp"
#include "brickforge/ydelta.hpp"

namespace brickforge {

namespace {

MultiGraph named(std::vector<std::string> names, const std::vector<NamePair>& edges) {
  std::map<std::string, VertexId> id;
  for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<VertexId>(i);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& [a, b] : edges) pairs.emplace_back(id.at(a), id.at(b));
  const int n = static_cast<int>(names.size());
  return MultiGraph::build(n, pairs, std::move(names));
}

VertexId vertex(const MultiGraph& g, std::string_view name) {
  const auto v = g.find_vertex(name);
  if (!v) throw GraphError(ErrorKind::UnknownName, "no vertex named " + std::string(name));
  return *v;
}

// Y->delta at `x`; the corner next to neighbour y is named corners[y], or
// "x_y" when y is not listed.
MultiGraph expand(const MultiGraph& g, std::string_view x, const std::map<std::string, std::string>& corners = {}) {
  const YDeltaResult r = y_to_delta(g, vertex(g, x));
  std::vector<std::string> names = g.names();
  names.resize(static_cast<std::size_t>(r.graph.vertex_count()));
  for (VertexId c : r.map.triangle) {
    for (VertexId y : r.graph.neighbours(c).members()) {
      if (r.map.provenance[static_cast<std::size_t>(y)] == vertex(g, x)) continue;
      const std::string& outside = g.vertex_name(r.map.provenance[static_cast<std::size_t>(y)]);
      const auto it = corners.find(outside);
      names[static_cast<std::size_t>(c)] = it != corners.end() ? it->second : std::string(x) + "_" + outside;
    }
  }
  return r.graph.with_names(std::move(names));
}

struct Atlas {
  std::vector<NamedGraph> entries;
  std::map<std::string, std::size_t, std::less<>> index;
  std::unordered_map<CanonicalLabel, std::string, CanonicalLabelHash> by_label;

  void add(NamedGraph g) {
    index[g.name] = entries.size();
    // Keep the first name for a class (none of the fixtures coincide, but
    // identify() must be deterministic if they ever do).
    by_label.emplace(canonical_label(g.graph), g.name);
    entries.push_back(std::move(g));
  }
  const MultiGraph& graph(const std::string& name) const { return entries[index.at(name)].graph; }
};

Atlas build_atlas() {
  Atlas a;
  const std::vector<NamePair> g5_forcing{{"u2", "u3"}, {"vp", "w"}, {"wp", "xp"}};

  const MultiGraph k4 = named({"u", "up", "y", "z"}, {{"u", "up"}, {"u", "y"}, {"u", "z"}, {"up", "y"}, {"up", "z"}, {"y", "z"}});
  NamedGraph K4{"K4", k4, "complete graph on four vertices", {}, {}};
  for (const Edge& e : k4.edges()) K4.stated_forcing.emplace_back(k4.vertex_name(e.u), k4.vertex_name(e.v));
  a.add(std::move(K4));

  a.add({"C6bar", expand(k4, "y", {{"u", "v"}, {"up", "vp"}, {"z", "w"}}), "K4 with Y->delta at y (the triangular prism)", {}, {}});
  a.add({"Petersen",
         named({"o0", "o1", "o2", "o3", "o4", "i0", "i1", "i2", "i3", "i4"},
               {{"o0", "o1"}, {"o1", "o2"}, {"o2", "o3"}, {"o3", "o4"}, {"o0", "o4"},
                {"o0", "i0"}, {"o1", "i1"}, {"o2", "i2"}, {"o3", "i3"}, {"o4", "i4"},
                {"i0", "i2"}, {"i2", "i4"}, {"i1", "i4"}, {"i1", "i3"}, {"i0", "i3"}}),
         "outer 5-cycle o0..o4, inner pentagram i0..i4, spokes oi-ii", {}, {}});
  a.add({"theta", named({"a", "b"}, {{"a", "b"}, {"a", "b"}, {"a", "b"}}), "two vertices joined by three parallel edges", {}, {}});
  a.add({"W5",
         named({"x", "c1", "c2", "c3", "c4", "c5"},
               {{"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"}, {"c4", "c5"}, {"c1", "c5"},
                {"x", "c1"}, {"x", "c2"}, {"x", "c3"}, {"x", "c4"}, {"x", "c5"}}),
         "hub x joined to every vertex of the 5-cycle c1..c5", {}, {}});

  const MultiGraph& c6 = a.graph("C6bar");
  const MultiGraph g2 = expand(c6, "z", {{"u", "x"}, {"up", "xp"}, {"w", "wp"}});
  a.add({"G2", g2, "C6bar with Y->delta at z (the bicorn); triangles w-v-vp and wp-x-xp", {}, {}});

  const MultiGraph g3 = expand(g2, "up", {{"u", "u1"}, {"vp", "u2"}, {"xp", "u3"}});
  a.add({"G3", g3, "G2 with Y->delta at up", g5_forcing, {}});
  const MultiGraph g4 = expand(g2, "vp", {{"v", "v1"}, {"up", "v2"}, {"w", "v3"}});
  a.add({"G4", g4, "G2 with Y->delta at vp", {}, {}});
  const MultiGraph g5 = expand(g3, "v", {{"u", "v1"}, {"vp", "v2"}, {"w", "v3"}});
  a.add({"G5", g5, "G3 with Y->delta at v", g5_forcing, {}});
  const MultiGraph g6 = expand(g4, "v3", {{"w", "v1p"}, {"v1", "v2p"}, {"v2", "v3p"}});
  a.add({"G6", g6, "G4 with Y->delta at v3", {}, {}});
  const MultiGraph g7 = expand(g5, "x");
  a.add({"G7", g7, "G5 with Y->delta at x", {}, {}});
  a.add({"G8", expand(g7, "u1"), "G7 with Y->delta at u1 (16 vertices)", {}, {}});

  a.add({"R0", expand(g3, "u"), "G3 with Y->delta at u: every vertex of K4 replaced by a triangle", {}, {}});
  a.add({"R1", expand(g2, "w", {{"v", "w1"}, {"vp", "w2"}, {"wp", "w3"}}), "G2 with Y->delta at w", {}, {{"v", "vp"}, {"u", "up"}}});
  a.add({"R2", expand(g3, "vp", {{"v", "v1p"}, {"u2", "v2p"}, {"w", "v3p"}}), "G3 with Y->delta at vp", {}, {{"wp", "xp"}}});
  a.add({"R3", expand(g5, "v1"), "G5 with Y->delta at v1", {}, {{"vp", "w"}}});
  a.add({"R4", expand(g5, "v2"), "G5 with Y->delta at v2", {}, {{"u2", "u3"}}});
  a.add({"R5", expand(g4, "v1"), "G4 with Y->delta at v1", {}, {{"v2", "v3"}}});
  a.add({"R6", expand(g6, "v2p"), "G6 with Y->delta at v2p", {}, {{"v1p", "v3p"}}});

  a.add({"octahedron",
         named({"a1", "a2", "b1", "b2", "c1", "c2"},
               {{"a1", "b1"}, {"a1", "b2"}, {"a1", "c1"}, {"a1", "c2"}, {"a2", "b1"}, {"a2", "b2"},
                {"a2", "c1"}, {"a2", "c2"}, {"b1", "c1"}, {"b1", "c2"}, {"b2", "c1"}, {"b2", "c2"}}),
         "K2,2,2; ai, bi, ci are the non-adjacent pairs", {}, {}});
  a.add({"K33",
         named({"a1", "a2", "a3", "b1", "b2", "b3"},
               {{"a1", "b1"}, {"a1", "b2"}, {"a1", "b3"}, {"a2", "b1"}, {"a2", "b2"}, {"a2", "b3"},
                {"a3", "b1"}, {"a3", "b2"}, {"a3", "b3"}}),
         "complete bipartite graph with sides a and b", {}, {}});
  return a;
}

const Atlas& atlas() {
  static const Atlas instance = build_atlas();
  return instance;
}

}  // namespace

const std::vector<std::string>& atlas_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const NamedGraph& g : atlas().entries) out.push_back(g.name);
    return out;
  }();
  return names;
}

std::optional<std::string> resolve_atlas_name(std::string_view name) {
  if (name == "prism") return "C6bar";
  if (name == "bicorn") return "G2";
  if (atlas().index.contains(name)) return std::string(name);
  return std::nullopt;
}

const NamedGraph& named_graph(std::string_view name) {
  const auto resolved = resolve_atlas_name(name);
  if (!resolved) throw GraphError(ErrorKind::UnknownName, "no atlas graph named " + std::string(name));
  return atlas().entries[atlas().index.find(*resolved)->second];
}

std::optional<std::string> identify(const MultiGraph& g) {
  const auto it = atlas().by_label.find(canonical_label(g));
  if (it == atlas().by_label.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& theorem_graphs() {
  static const std::vector<std::string> names{"K4", "C6bar", "Petersen", "G2", "G3", "G4", "G5", "G6", "G7", "G8"};
  return names;
}

const std::vector<std::string>& obstruction_graphs() {
  static const std::vector<std::string> names{"R1", "R2", "R3", "R4", "R5", "R6"};
  return names;
}

EdgeId edge_by_names(const MultiGraph& g, const NamePair& ends) {
  const auto e = g.find_edge(vertex(g, ends.first), vertex(g, ends.second));
  if (!e) throw GraphError(ErrorKind::UnknownEdge, "no edge " + ends.first + "-" + ends.second);
  return *e;
}

}  // namespace brickforge
