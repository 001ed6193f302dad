#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge {

using NamePair = std::pair<std::string, std::string>;

/// A named fixture. Graphs defined by Y->delta sequences are built that way;
/// only Petersen, theta, W5, octahedron and K33 are written out directly.
///
/// Vertex names are ASCII: a prime becomes a trailing "p" (u' -> up,
/// v_1' -> v1p). Where the construction does not fix a label, the corner of
/// an expanded vertex x next to neighbour y is called "x_y".
struct NamedGraph {
  std::string name;
  MultiGraph graph;
  std::string construction;
  /// Forcing edges the text names explicitly, as vertex-name pairs.
  std::vector<NamePair> stated_forcing;
  /// Edges the text names as b-invariant but not forcing.
  std::vector<NamePair> stated_b_invariant_not_forcing;
};

/// Canonical names in listing order.
const std::vector<std::string>& atlas_names();

/// Canonical name for `name` or one of its aliases (prism, bicorn).
std::optional<std::string> resolve_atlas_name(std::string_view name);

/// Throws UnknownName.
const NamedGraph& named_graph(std::string_view name);

/// Atlas name of a graph isomorphic to g, if any.
std::optional<std::string> identify(const MultiGraph& g);

/// K4, C6bar, Petersen and G2..G8: the cubic bricks whose b-invariant edges
/// are all forcing.
const std::vector<std::string>& theorem_graphs();

/// R1..R6.
const std::vector<std::string>& obstruction_graphs();

/// Edge id for a pair of vertex names. Throws UnknownName or UnknownEdge.
EdgeId edge_by_names(const MultiGraph& g, const NamePair& ends);

}  // namespace brickforge
