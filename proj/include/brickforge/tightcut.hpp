#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "brickforge/graph.hpp"
#include "brickforge/matchings.hpp"

namespace brickforge {

/// How find_nontrivial_tight_cut picks among tight shores. The default takes
/// the smallest shore size first and the lexicographically least member list.
/// Other orders rank vertices differently or scan sizes from large to small;
/// the resulting leaf list is the same up to parallel edges.
struct TieBreak {
  enum class VertexOrder { Identity, Reverse, Shuffled };
  VertexOrder order = VertexOrder::Identity;
  bool largest_first = false;
  std::uint32_t seed = 0;

  std::vector<VertexId> ranking(int n) const;
  std::string describe() const;
};

/// True iff every perfect matching meets the cut of `shore` exactly once.
/// Throws NotMatchingCovered.
bool is_tight_cut(const MultiGraph& g, const Shore& shore);

/// Exhaustive search over odd shores X with 3 <= |X| <= n/2 (a cut and its
/// complement are the same cut). Throws NotMatchingCovered.
std::optional<Shore> find_nontrivial_tight_cut(const MultiGraph& g, const TieBreak& tie = {});

/// Same search against precomputed perfect matchings, no precondition check.
std::optional<Shore> find_nontrivial_tight_cut(const MultiGraph& g, const std::vector<EdgeMask>& matchings,
                                               const TieBreak& tie = {});

struct DecompositionNode {
  enum class Kind { Brick, Brace, Split };

  MultiGraph graph;
  Kind kind = Kind::Brace;
  std::optional<Shore> shore;  // set for Split
  /// children[0] = graph / shore, children[1] = graph / complement
  std::vector<DecompositionNode> children;

  bool is_leaf() const { return kind != Kind::Split; }
};

struct DecompositionTree {
  DecompositionNode root;

  std::vector<const DecompositionNode*> leaves() const;
  int brick_count() const;
  int brace_count() const;
  /// Indented text trace, one line per node.
  std::string trace() const;
};

void to_json(nlohmann::json& j, const DecompositionNode& node);
void to_json(nlohmann::json& j, const DecompositionTree& tree);

/// Splits on nontrivial tight cuts until none remain; leaves are bricks
/// (nonbipartite) or braces. Both children of every split are checked to be
/// matching covered. Throws NotMatchingCovered.
DecompositionTree tight_cut_decomposition(const MultiGraph& g, const TieBreak& tie = {});

/// Number of bricks in the tight cut decomposition. Throws NotMatchingCovered.
int brick_count(const MultiGraph& g);

}  // namespace brickforge
