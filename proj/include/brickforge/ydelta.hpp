#pragma once

#include <array>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge {

/// Edge and vertex correspondence of a Y->delta step. Old edge ids are kept:
/// the edge x-y_i becomes x_i-y_i under the same id, and the three triangle
/// edges are appended.
struct CorrespondenceMap {
  std::vector<EdgeId> edge_map;       // old edge id -> new edge id
  std::vector<VertexId> vertex_map;   // old vertex -> new vertex; the replaced vertex maps to corner 0
  std::vector<VertexId> provenance;   // new vertex -> old vertex it stands for
  std::array<VertexId, 3> triangle{};        // corners x1, x2, x3
  std::array<EdgeId, 3> triangle_edges{};    // x1x2, x2x3, x1x3
};

struct YDeltaResult {
  MultiGraph graph;
  CorrespondenceMap map;
};

/// Replaces degree-3 vertex v by a triangle. Corner x1 keeps v's id and takes
/// the smallest neighbour; x2 = n and x3 = n + 1 take the next two.
/// Throws NotDegreeThree or NeighborsCoincide.
YDeltaResult y_to_delta(const MultiGraph& g, VertexId v);

/// Incident edges of a degree-4 vertex: x1 keeps `first`, x2 gets `second`,
/// x3 gets `third` and `fourth`.
struct DegreeFourSplit {
  EdgeId first;
  EdgeId second;
  EdgeId third;
  EdgeId fourth;
};

/// The far ends y1..y4 of the split edges may coincide only once, and only
/// across the groups: y4 = y1 is the allowed case (or its mirror images
/// under swapping x1 with x2 or the two edges at x3). Otherwise two corners
/// would hang on the same neighbour and the result has a 2-cut.
bool split_is_admissible(const MultiGraph& g, VertexId v, const DegreeFourSplit& split);

/// Degree-4 analogue of y_to_delta; parallel edges at v are allowed.
/// Throws NotDegreeFour, or InvalidSplit when the split does not partition
/// the edges at v or is not admissible.
YDeltaResult generalized_y_to_delta(const MultiGraph& g, VertexId v, const DegreeFourSplit& split);

/// The admissible splits among the six choices of the pair that goes to x3
/// (six when v has four distinct neighbours).
std::vector<DegreeFourSplit> degree_four_splits(const MultiGraph& g, VertexId v);

/// Throws NotATriangle.
MultiGraph contract_triangle(const MultiGraph& g, const std::array<VertexId, 3>& t);

/// Vertex triples a < b < c that are pairwise adjacent, in lexicographic order.
std::vector<std::array<VertexId, 3>> triangles(const MultiGraph& g);

/// True when t is a triangle whose contraction is a legal Y->delta preimage:
/// each corner has degree 3 and the three outside neighbours are distinct.
bool is_replacement_triangle(const MultiGraph& g, const std::array<VertexId, 3>& t);

/// g is obtained from h by zero or more Y->delta steps. Reverse search over
/// replacement-triangle contractions, memoized on canonical labels.
/// Throws NotCubic.
bool is_base_of(const MultiGraph& h, const MultiGraph& g);

}  // namespace brickforge
