#pragma once

#include "json.hpp"

#include "brickforge/graph.hpp"

namespace brickforge {

struct GraphClass {
  bool connected = false;
  int vertex_connectivity = 0;
  bool bipartite = false;
  bool matching_covered = false;
  bool bicritical = false;
  bool brick = false;
  bool brace = false;
  bool cubic = false;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

void to_json(nlohmann::json& j, const GraphClass& c);

/// Smallest vertex set whose removal disconnects g or leaves fewer than two
/// vertices. Separators of size <= 3 are found by exhaustive removal; larger
/// values come from max-flow.
int vertex_connectivity(const MultiGraph& g);

/// Independent route: minimum over non-adjacent pairs of unit-capacity
/// vertex-disjoint path counts (n - 1 when every pair is adjacent).
int vertex_connectivity_by_flow(const MultiGraph& g);

/// Connected, at least one edge, every edge in some perfect matching.
bool is_matching_covered(const MultiGraph& g);

/// At least four vertices and g - u - v has a perfect matching for all pairs.
bool is_bicritical(const MultiGraph& g);

/// Brick iff 3-connected and bicritical. When g is small enough the
/// definition (matching covered, nonbipartite, no nontrivial tight cut) is
/// evaluated too and a disagreement raises InternalInconsistency.
GraphClass classify(const MultiGraph& g);

/// Cheap brick test without the tight-cut cross-check.
bool is_brick(const MultiGraph& g);

/// Largest vertex count for which classify() runs the tight-cut cross-check.
inline constexpr int kClassifyCrossCheckLimit = 16;

}  // namespace brickforge
