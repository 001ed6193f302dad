#pragma once

#include <bit>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace brickforge {

using VertexId = int;
using EdgeId = int;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 256;

/// Edge subset of one graph, indexed by edge id.
using EdgeMask = std::bitset<kMaxEdges>;

std::vector<EdgeId> edge_ids(const EdgeMask& mask);

/// Vertex subset of one graph (at most kMaxVertices vertices).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::span<const VertexId> ids);

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr VertexSet complement(int n) const { return VertexSet(full(n).bits_ & ~bits_); }

  std::vector<VertexId> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Loopless multigraph with dense vertex ids 0..n-1 and positional edge ids.
/// Values are immutable; every structural operation returns a new graph and
/// an id correspondence.
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Throws LoopRejected, VertexOutOfRange or TooLarge.
  static MultiGraph build(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_pairs,
                          std::vector<std::string> names = {});
  static MultiGraph build(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edge_pairs,
                          std::vector<std::string> names = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;

  /// Incident edge ids of v in increasing order.
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  const EdgeMask& incident_mask(VertexId v) const { return incident_mask_[static_cast<std::size_t>(v)]; }
  VertexSet neighbours(VertexId v) const { return VertexSet(adjacency_[static_cast<std::size_t>(v)]); }
  int multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return neighbours(u).contains(v); }

  bool has_edge_id(EdgeId e) const { return e >= 0 && e < edge_count(); }
  bool is_simple() const;
  bool is_cubic() const;

  /// Optional vertex names; ignored by isomorphism.
  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string vertex_name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  /// "u-v" using vertex names when present.
  std::string edge_label(EdgeId e) const;

  MultiGraph with_names(std::vector<std::string> names) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edge_pairs() == b.edge_pairs();
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<EdgeMask> incident_mask_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::string> names_;
};

/// A vertex subset together with its edge cut.
struct Shore {
  VertexSet members;
  EdgeMask cut;
  bool trivial = false;

  std::vector<EdgeId> cut_edges() const { return edge_ids(cut); }
};

/// Throws EmptyOrFullShore when x is empty or all of V.
Shore edge_cut(const MultiGraph& g, VertexSet x);
EdgeMask cut_mask(const MultiGraph& g, VertexSet x);

struct EdgeDeletion {
  MultiGraph graph;
  /// old edge id -> new edge id (absent for the deleted edge)
  std::vector<std::optional<EdgeId>> edge_map;
};

/// Throws UnknownEdge.
EdgeDeletion delete_edge(const MultiGraph& g, EdgeId e);

struct Contraction {
  MultiGraph graph;
  /// old edge id -> new edge id; edges inside the contracted set are absent
  std::vector<std::optional<EdgeId>> edge_map;
  /// old vertex id -> new vertex id; every member of the set maps to `merged`
  std::vector<VertexId> vertex_map;
  VertexId merged = 0;
};

/// Contracts x to one vertex placed at the position of its smallest member.
/// Edges inside x vanish; parallel edges are kept. Throws EmptyShore.
Contraction contract(const MultiGraph& g, VertexSet x);

/// Removes the vertices in `removed`; survivors are renumbered in order.
struct InducedSubgraph {
  MultiGraph graph;
  std::vector<VertexId> vertex_map;  // old -> new, -1 when removed
  std::vector<std::optional<EdgeId>> edge_map;
};
InducedSubgraph remove_vertices(const MultiGraph& g, VertexSet removed);

/// Adds one edge at the end of the edge list.
MultiGraph add_edge(const MultiGraph& g, VertexId u, VertexId v);

/// Same vertices, at most one edge per adjacent pair.
MultiGraph collapse_parallel_edges(const MultiGraph& g);

bool is_connected(const MultiGraph& g, VertexSet removed = {});
std::vector<VertexSet> components(const MultiGraph& g, VertexSet removed = {});
bool is_bipartite(const MultiGraph& g);

}  // namespace brickforge
