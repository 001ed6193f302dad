#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "brickforge/graph.hpp"

namespace brickforge {

struct EdgeFlags {
  bool in_some_pm = false;
  std::int64_t pm_count = 0;
  bool forcing = false;
  bool removable = false;
  bool b_invariant = false;
  bool thin = false;
};

struct EdgeClassification {
  std::vector<EdgeFlags> edges;  // indexed by edge id

  std::vector<EdgeId> forcing() const;
  std::vector<EdgeId> removable() const;
  std::vector<EdgeId> b_invariant() const;
  std::vector<EdgeId> thin() const;
};

/// Triangle apex-y-z whose sides apex-y and apex-z are subdivided by `left`
/// and `right`, with left-right joined. Six edges: apex-left, apex-right,
/// left-right, left-y, right-z and the bottom y-z.
struct Pyramid {
  VertexId apex = 0;
  VertexId left = 0;
  VertexId right = 0;
  VertexId y = 0;
  VertexId z = 0;
  EdgeId bottom = 0;
  std::vector<EdgeId> edges;

  std::vector<VertexId> vertices() const { return {apex, left, right, y, z}; }
};

/// g - e is matching covered. Throws NotMatchingCovered.
bool is_removable(const MultiGraph& g, EdgeId e);

/// Removable and b(g - e) = b(g). Throws NotMatchingCovered.
bool is_b_invariant(const MultiGraph& g, EdgeId e);

/// Contracts a degree-2 vertex with its two neighbours. Throws NotDegreeTwo,
/// NeighborsCoincide, or PreconditionViolated when g has fewer than four
/// vertices.
MultiGraph bicontract(const MultiGraph& g, VertexId v);

/// KeepParallel is the multigraph retract. CollapseParallel merges parallel
/// edges before every step, so a vertex left with two distinct neighbours is
/// bicontracted too; it reads "degree" in the underlying simple graph.
enum class RetractMode { KeepParallel, CollapseParallel };

/// Bicontracts the lowest-id bicontractible degree-2 vertex until none is
/// left or fewer than four vertices remain. Throws Degenerate when the input
/// has fewer than two vertices or the result has no edges.
MultiGraph retract(const MultiGraph& g, RetractMode mode = RetractMode::KeepParallel);
/// Same fixed point search, highest id first; used to check order effects.
MultiGraph retract_highest_first(const MultiGraph& g);

/// e is removable and the retract of g - e is a brick. Without removability
/// the retract can be a brick while g - e is not matching covered (the edge
/// v-v' of the bicorn), which would break thin => b-invariant. Degenerate
/// retracts count as not thin.
/// Throws NotABrick.
bool is_thin(const MultiGraph& g, EdgeId e, RetractMode mode = RetractMode::KeepParallel);

/// All pyramid subgraphs (containment, not induced), one per bottom edge id
/// and apex.
std::vector<Pyramid> find_pyramids(const MultiGraph& g);

/// Rank over the rationals of the perfect-matching incidence matrix.
int matching_lattice_rank(const MultiGraph& g);

/// Number of perfect matchings equals the rank of their incidence vectors.
/// Throws NotMatchingCovered.
bool is_extremal(const MultiGraph& g);

/// All per-edge flags for a brick. Throws NotABrick, or InternalInconsistency
/// when thin => b-invariant => removable or forcing => pm_count = 1 fails.
EdgeClassification edge_report(const MultiGraph& g);

nlohmann::json to_json(const MultiGraph& g, const EdgeClassification& report);
/// Markdown table keyed by edge endpoints (vertex names when present).
std::string to_markdown(const MultiGraph& g, const EdgeClassification& report);

}  // namespace brickforge
