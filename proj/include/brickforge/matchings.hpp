#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge {

/// A perfect matching, as sorted edge ids plus the same set as a mask.
struct Matching {
  std::vector<EdgeId> edges;
  EdgeMask mask;

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges == b.edges; }
};

/// All perfect matchings of g, each once, sorted lexicographically by edge-id
/// sequence. Parallel edges give distinct matchings.
std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g);

/// Visits perfect matchings of g - `removed`; the visitor returns false to stop.
/// Branches on the lowest uncovered vertex over its incident edges.
void for_each_perfect_matching(const MultiGraph& g, VertexSet removed,
                               const std::function<bool(const EdgeMask&)>& visit);

/// Number of perfect matchings of g - `removed`, counting stops at `limit`.
std::int64_t count_perfect_matchings(const MultiGraph& g, VertexSet removed = {},
                                     std::int64_t limit = INT64_MAX);

/// Existence check on g - `removed`; memoized over uncovered-vertex sets.
bool has_perfect_matching(const MultiGraph& g, VertexSet removed = {});

/// Memoized existence checks against one graph; the memo is shared across
/// calls, which makes all-pairs questions (bicriticality) cheap.
class MatchingExistence {
 public:
  explicit MatchingExistence(const MultiGraph& g) : g_(g) {}
  bool operator()(VertexSet removed = {});

 private:
  const MultiGraph& g_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

std::optional<Matching> has_unique_perfect_matching(const MultiGraph& g);

/// Bridges of every component; a parallel edge is never a bridge.
std::vector<EdgeId> bridges(const MultiGraph& g);

/// For connected g with a unique perfect matching, a bridge in that matching.
/// Throws PreconditionViolated otherwise; an empty result would refute Kotzig's
/// bridge theorem.
std::optional<EdgeId> kotzig_witness(const MultiGraph& g);

/// Number of perfect matchings containing each edge.
std::vector<std::int64_t> edge_matching_counts(const MultiGraph& g);
std::vector<std::int64_t> edge_matching_counts(const MultiGraph& g, const std::vector<Matching>& matchings);

/// Edges lying in exactly one perfect matching. Edges in no perfect matching
/// are not forcing. "Solitary" in the older literature means the same thing,
/// and for an edge e = uv it is equivalent to g - u - v having a unique
/// perfect matching.
std::vector<EdgeId> forcing_edges(const MultiGraph& g);

bool is_perfect_matching(const MultiGraph& g, const EdgeMask& m);

}  // namespace brickforge
