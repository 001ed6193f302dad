#pragma once

#include <compare>
#include <span>
#include <string>

#include "brickforge/graph.hpp"

namespace brickforge {

/// Byte encoding of a multigraph up to vertex relabeling. Equal labels mean
/// isomorphic graphs (parallel-edge multiplicities included).
struct CanonicalLabel {
  std::string bytes;

  std::string hex() const;
  static CanonicalLabel from_hex(std::string_view hex);

  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

struct CanonicalLabelHash {
  std::size_t operator()(const CanonicalLabel& l) const noexcept { return std::hash<std::string>{}(l.bytes); }
};

/// Partition refinement with exhaustive individualization over the first
/// non-singleton cell. Twin vertices in a cell are branched on once.
CanonicalLabel canonical_label(const MultiGraph& g);

/// Same, for a vertex-coloured graph: isomorphisms must preserve colours.
CanonicalLabel canonical_label(const MultiGraph& g, std::span<const int> vertex_colours);

/// A relabeling `order` such that vertex order[i] of g takes position i in the
/// canonical form.
std::vector<VertexId> canonical_order(const MultiGraph& g, std::span<const int> vertex_colours = {});

/// g relabeled by canonical_order, edges sorted; isomorphic inputs give equal
/// outputs (names are dropped).
MultiGraph canonical_form(const MultiGraph& g);

bool is_isomorphic(const MultiGraph& g, const MultiGraph& h);

}  // namespace brickforge
