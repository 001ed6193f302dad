#include "brickforge/graph.hpp"

#include <algorithm>
#include <numeric>

#include "brickforge/error.hpp"

namespace brickforge {

std::vector<EdgeId> edge_ids(const EdgeMask& mask) {
  std::vector<EdgeId> out;
  for (std::size_t e = mask._Find_first(); e < mask.size(); e = mask._Find_next(e)) {
    out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

VertexSet::VertexSet(std::initializer_list<VertexId> ids) {
  for (VertexId v : ids) insert(v);
}

VertexSet::VertexSet(std::span<const VertexId> ids) {
  for (VertexId v : ids) insert(v);
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

MultiGraph MultiGraph::build(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edge_pairs,
                             std::vector<std::string> names) {
  std::vector<std::pair<VertexId, VertexId>> pairs(edge_pairs);
  return build(vertex_count, pairs, std::move(names));
}

MultiGraph MultiGraph::build(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_pairs,
                             std::vector<std::string> names) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw GraphError(ErrorKind::TooLarge, "vertex count " + std::to_string(vertex_count) + " outside 0.." +
                                              std::to_string(kMaxVertices));
  }
  if (static_cast<int>(edge_pairs.size()) > kMaxEdges) {
    throw GraphError(ErrorKind::TooLarge, "more than " + std::to_string(kMaxEdges) + " edges");
  }
  if (!names.empty() && static_cast<int>(names.size()) != vertex_count) {
    throw GraphError(ErrorKind::VertexOutOfRange, "name list length differs from vertex count");
  }
  MultiGraph g;
  g.n_ = vertex_count;
  g.incidence_.resize(static_cast<std::size_t>(vertex_count));
  g.incident_mask_.resize(static_cast<std::size_t>(vertex_count));
  g.adjacency_.assign(static_cast<std::size_t>(vertex_count), 0);
  g.names_ = std::move(names);
  for (const auto& [u, v] : edge_pairs) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw GraphError(ErrorKind::VertexOutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                           std::to_string(vertex_count));
    }
    if (u == v) throw GraphError(ErrorKind::LoopRejected, "loop at vertex " + std::to_string(u));
    const EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({u, v});
    for (VertexId x : {u, v}) {
      g.incidence_[static_cast<std::size_t>(x)].push_back(id);
      g.incident_mask_[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(id));
    }
    g.adjacency_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g.adjacency_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return g;
}

std::vector<std::pair<VertexId, VertexId>> MultiGraph::edge_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  if (!adjacent(u, v)) return 0;
  int count = 0;
  for (EdgeId e : incident(u)) {
    if (edge(e).other(u) == v) ++count;
  }
  return count;
}

bool MultiGraph::is_simple() const {
  for (VertexId v = 0; v < n_; ++v) {
    if (neighbours(v).size() != degree(v)) return false;
  }
  return true;
}

bool MultiGraph::is_cubic() const {
  for (VertexId v = 0; v < n_; ++v) {
    if (degree(v) != 3) return false;
  }
  return n_ > 0;
}

std::string MultiGraph::vertex_name(VertexId v) const {
  if (has_names()) return names_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

std::optional<VertexId> MultiGraph::find_vertex(std::string_view name) const {
  for (VertexId v = 0; v < n_; ++v) {
    if (vertex_name(v) == name) return v;
  }
  return std::nullopt;
}

std::optional<EdgeId> MultiGraph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  for (EdgeId e : incident(u)) {
    if (edge(e).other(u) == v) return e;
  }
  return std::nullopt;
}

std::string MultiGraph::edge_label(EdgeId e) const {
  const Edge& ed = edge(e);
  return vertex_name(ed.u) + "-" + vertex_name(ed.v);
}

MultiGraph MultiGraph::with_names(std::vector<std::string> names) const {
  return build(n_, edge_pairs(), std::move(names));
}

EdgeMask cut_mask(const MultiGraph& g, VertexSet x) {
  // Edges with both ends in x appear twice and cancel.
  EdgeMask cut;
  for (VertexId v : x.members()) cut ^= g.incident_mask(v);
  return cut;
}

Shore edge_cut(const MultiGraph& g, VertexSet x) {
  const int n = g.vertex_count();
  if (x.empty() || x == VertexSet::full(n) || (x.bits() & ~VertexSet::full(n).bits()) != 0) {
    throw GraphError(ErrorKind::EmptyOrFullShore, "shore must be a nonempty proper vertex subset");
  }
  Shore s;
  s.members = x;
  s.cut = cut_mask(g, x);
  s.trivial = x.size() == 1 || n - x.size() == 1;
  return s;
}

EdgeDeletion delete_edge(const MultiGraph& g, EdgeId e) {
  if (!g.has_edge_id(e)) throw GraphError(ErrorKind::UnknownEdge, "edge id " + std::to_string(e));
  EdgeDeletion out;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  out.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    out.edge_map[static_cast<std::size_t>(f)] = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(g.edge(f).u, g.edge(f).v);
  }
  out.graph = MultiGraph::build(g.vertex_count(), pairs, g.names());
  return out;
}

Contraction contract(const MultiGraph& g, VertexSet x) {
  const int n = g.vertex_count();
  x = VertexSet(x.bits() & VertexSet::full(n).bits());
  if (x.empty()) throw GraphError(ErrorKind::EmptyShore, "cannot contract an empty vertex set");
  Contraction out;
  const VertexId anchor = x.members().front();
  out.vertex_map.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::string> names;
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (x.contains(v) && v != anchor) continue;
    out.vertex_map[static_cast<std::size_t>(v)] = next++;
  }
  out.merged = out.vertex_map[static_cast<std::size_t>(anchor)];
  for (VertexId v : x.members()) out.vertex_map[static_cast<std::size_t>(v)] = out.merged;
  if (g.has_names()) {
    names.resize(static_cast<std::size_t>(next));
    std::string merged_name;
    for (VertexId v = 0; v < n; ++v) {
      if (x.contains(v)) {
        merged_name += (merged_name.empty() ? "" : "+") + g.vertex_name(v);
      } else {
        names[static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(v)])] = g.vertex_name(v);
      }
    }
    names[static_cast<std::size_t>(out.merged)] = merged_name;
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  out.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (x.contains(ed.u) && x.contains(ed.v)) continue;
    out.edge_map[static_cast<std::size_t>(e)] = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(out.vertex_map[static_cast<std::size_t>(ed.u)], out.vertex_map[static_cast<std::size_t>(ed.v)]);
  }
  out.graph = MultiGraph::build(next, pairs, std::move(names));
  return out;
}

InducedSubgraph remove_vertices(const MultiGraph& g, VertexSet removed) {
  InducedSubgraph out;
  const int n = g.vertex_count();
  out.vertex_map.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::string> names;
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (removed.contains(v)) continue;
    out.vertex_map[static_cast<std::size_t>(v)] = next++;
    if (g.has_names()) names.push_back(g.vertex_name(v));
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  out.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (removed.contains(ed.u) || removed.contains(ed.v)) continue;
    out.edge_map[static_cast<std::size_t>(e)] = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(out.vertex_map[static_cast<std::size_t>(ed.u)], out.vertex_map[static_cast<std::size_t>(ed.v)]);
  }
  out.graph = MultiGraph::build(next, pairs, std::move(names));
  return out;
}

MultiGraph add_edge(const MultiGraph& g, VertexId u, VertexId v) {
  auto pairs = g.edge_pairs();
  pairs.emplace_back(u, v);
  return MultiGraph::build(g.vertex_count(), pairs, g.names());
}

MultiGraph collapse_parallel_edges(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbours(u).members()) {
      if (u < v) pairs.emplace_back(u, v);
    }
  }
  return MultiGraph::build(g.vertex_count(), pairs, g.names());
}

std::vector<VertexSet> components(const MultiGraph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  const std::uint64_t all = VertexSet::full(g.vertex_count()).bits() & ~removed.bits();
  std::uint64_t unseen = all;
  while (unseen != 0) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
        next |= g.neighbours(std::countr_zero(b)).bits();
      }
      next &= all & ~comp;
      comp |= next;
      frontier = next;
    }
    out.emplace_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const MultiGraph& g, VertexSet removed) {
  return components(g, removed).size() <= 1;
}

bool is_bipartite(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbours(v).members()) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace brickforge
