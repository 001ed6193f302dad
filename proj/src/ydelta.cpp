#include "brickforge/ydelta.hpp"

#include <algorithm>
#include <unordered_set>

#include "brickforge/canon.hpp"
#include "brickforge/error.hpp"

namespace brickforge {

namespace {

// Replaces v by corners {v, n, n+1}; corner_of_edge[i] says which corner the
// i-th incident edge of v is reattached to.
YDeltaResult expand(const MultiGraph& g, VertexId v, const std::vector<std::pair<EdgeId, int>>& corner_of_edge) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const std::array<VertexId, 3> corners{v, n, n + 1};
  auto pairs = g.edge_pairs();
  for (const auto& [e, corner] : corner_of_edge) {
    auto& p = pairs[static_cast<std::size_t>(e)];
    (p.first == v ? p.first : p.second) = corners[static_cast<std::size_t>(corner)];
  }
  pairs.emplace_back(corners[0], corners[1]);
  pairs.emplace_back(corners[1], corners[2]);
  pairs.emplace_back(corners[0], corners[2]);

  std::vector<std::string> names;
  if (g.has_names()) {
    names = g.names();
    const std::string base = g.vertex_name(v);
    names[static_cast<std::size_t>(v)] = base + "1";
    names.push_back(base + "2");
    names.push_back(base + "3");
  }

  YDeltaResult out;
  out.graph = MultiGraph::build(n + 2, pairs, std::move(names));
  CorrespondenceMap& map = out.map;
  map.edge_map.resize(static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) map.edge_map[static_cast<std::size_t>(e)] = e;
  map.vertex_map.resize(static_cast<std::size_t>(n));
  for (VertexId x = 0; x < n; ++x) map.vertex_map[static_cast<std::size_t>(x)] = x;
  map.provenance.resize(static_cast<std::size_t>(n + 2));
  for (VertexId x = 0; x < n; ++x) map.provenance[static_cast<std::size_t>(x)] = x;
  map.provenance[static_cast<std::size_t>(n)] = v;
  map.provenance[static_cast<std::size_t>(n + 1)] = v;
  map.triangle = corners;
  map.triangle_edges = {m, m + 1, m + 2};
  return out;
}

}  // namespace

YDeltaResult y_to_delta(const MultiGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  if (g.degree(v) != 3) throw GraphError(ErrorKind::NotDegreeThree, "vertex " + g.vertex_name(v));
  if (g.neighbours(v).size() != 3) {
    throw GraphError(ErrorKind::NeighborsCoincide, "parallel edges at " + g.vertex_name(v));
  }
  std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
  std::sort(inc.begin(), inc.end(),
            [&](EdgeId a, EdgeId b) { return g.edge(a).other(v) < g.edge(b).other(v); });
  return expand(g, v, {{inc[0], 0}, {inc[1], 1}, {inc[2], 2}});
}

bool split_is_admissible(const MultiGraph& g, VertexId v, const DegreeFourSplit& split) {
  auto far = [&](EdgeId e) { return g.edge(e).other(v); };
  const VertexId y1 = far(split.first), y2 = far(split.second), y3 = far(split.third), y4 = far(split.fourth);
  const int shared = (y1 == y3) + (y1 == y4) + (y2 == y3) + (y2 == y4);
  return y1 != y2 && y3 != y4 && shared <= 1;
}

YDeltaResult generalized_y_to_delta(const MultiGraph& g, VertexId v, const DegreeFourSplit& split) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  if (g.degree(v) != 4) throw GraphError(ErrorKind::NotDegreeFour, "vertex " + g.vertex_name(v));
  std::vector<EdgeId> given{split.first, split.second, split.third, split.fourth};
  std::sort(given.begin(), given.end());
  const std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
  if (given != inc) throw GraphError(ErrorKind::InvalidSplit, "split must partition the edges at " + g.vertex_name(v));
  if (!split_is_admissible(g, v, split)) {
    throw GraphError(ErrorKind::InvalidSplit, "split at " + g.vertex_name(v) + " joins two corners to one neighbour");
  }
  return expand(g, v, {{split.first, 0}, {split.second, 1}, {split.third, 2}, {split.fourth, 2}});
}

std::vector<DegreeFourSplit> degree_four_splits(const MultiGraph& g, VertexId v) {
  if (g.degree(v) != 4) throw GraphError(ErrorKind::NotDegreeFour, "vertex " + g.vertex_name(v));
  const auto inc = g.incident(v);
  std::vector<DegreeFourSplit> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      std::vector<EdgeId> rest;
      for (int k = 0; k < 4; ++k) {
        if (k != a && k != b) rest.push_back(inc[static_cast<std::size_t>(k)]);
      }
      const DegreeFourSplit split{rest[0], rest[1], inc[static_cast<std::size_t>(a)], inc[static_cast<std::size_t>(b)]};
      if (split_is_admissible(g, v, split)) out.push_back(split);
    }
  }
  return out;
}

MultiGraph contract_triangle(const MultiGraph& g, const std::array<VertexId, 3>& t) {
  const auto [a, b, c] = t;
  const int n = g.vertex_count();
  const bool in_range = a >= 0 && b >= 0 && c >= 0 && a < n && b < n && c < n;
  if (!in_range || a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c)) {
    throw GraphError(ErrorKind::NotATriangle, "vertices do not form a triangle");
  }
  return contract(g, VertexSet{a, b, c}).graph;
}

std::vector<std::array<VertexId, 3>> triangles(const MultiGraph& g) {
  std::vector<std::array<VertexId, 3>> out;
  const int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b : g.neighbours(a).members()) {
      if (b <= a) continue;
      for (VertexId c : VertexSet(g.neighbours(a).bits() & g.neighbours(b).bits()).members()) {
        if (c > b) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

bool is_replacement_triangle(const MultiGraph& g, const std::array<VertexId, 3>& t) {
  VertexSet outside;
  for (VertexId x : t) {
    if (g.degree(x) != 3) return false;
    for (VertexId y : g.neighbours(x).members()) {
      if (y != t[0] && y != t[1] && y != t[2]) outside.insert(y);
    }
  }
  if (outside.size() != 3) return false;
  for (VertexId x : t) {
    for (VertexId y : t) {
      if (x < y && g.multiplicity(x, y) != 1) return false;
    }
  }
  return true;
}

namespace {

bool reaches_base(const MultiGraph& g, const CanonicalLabel& target, int target_n,
                  std::unordered_set<CanonicalLabel, CanonicalLabelHash>& dead) {
  if (g.vertex_count() < target_n) return false;
  const CanonicalLabel label = canonical_label(g);
  if (g.vertex_count() == target_n) return label == target;
  if (dead.contains(label)) return false;
  for (const auto& t : triangles(g)) {
    if (!is_replacement_triangle(g, t)) continue;
    if (reaches_base(contract_triangle(g, t), target, target_n, dead)) return true;
  }
  dead.insert(label);
  return false;
}

}  // namespace

bool is_base_of(const MultiGraph& h, const MultiGraph& g) {
  if (!h.is_cubic() || !g.is_cubic()) throw GraphError(ErrorKind::NotCubic, "base relation is defined on cubic graphs");
  std::unordered_set<CanonicalLabel, CanonicalLabelHash> dead;
  return reaches_base(g, canonical_label(h), h.vertex_count(), dead);
}

}  // namespace brickforge
