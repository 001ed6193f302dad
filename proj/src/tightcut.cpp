#include "brickforge/tightcut.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "brickforge/error.hpp"
#include "brickforge/structure.hpp"

namespace brickforge {

namespace {

void require_matching_covered(const MultiGraph& g) {
  if (!is_matching_covered(g)) throw GraphError(ErrorKind::NotMatchingCovered, "graph is not matching covered");
}

std::vector<EdgeMask> matching_masks(const MultiGraph& g) {
  std::vector<EdgeMask> out;
  for_each_perfect_matching(g, {}, [&](const EdgeMask& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool meets_each_once(const EdgeMask& cut, const std::vector<EdgeMask>& matchings) {
  return std::all_of(matchings.begin(), matchings.end(),
                     [&](const EdgeMask& m) { return (m & cut).count() == 1; });
}

void trace_node(const DecompositionNode& node, int depth, std::ostringstream& out) {
  const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
  const MultiGraph& g = node.graph;
  out << indent;
  switch (node.kind) {
    case DecompositionNode::Kind::Brick: out << "brick"; break;
    case DecompositionNode::Kind::Brace: out << "brace"; break;
    case DecompositionNode::Kind::Split: out << "split"; break;
  }
  out << " n=" << g.vertex_count() << " m=" << g.edge_count();
  if (node.shore) {
    out << " shore={";
    bool first = true;
    for (VertexId v : node.shore->members.members()) {
      out << (first ? "" : ",") << g.vertex_name(v);
      first = false;
    }
    out << "} cut={";
    first = true;
    for (EdgeId e : node.shore->cut_edges()) {
      out << (first ? "" : ",") << g.edge_label(e);
      first = false;
    }
    out << "}";
  }
  out << "\n";
  for (const auto& child : node.children) trace_node(child, depth + 1, out);
}

DecompositionNode decompose(const MultiGraph& g, const TieBreak& tie) {
  DecompositionNode node;
  node.graph = g;
  const auto matchings = matching_masks(g);
  auto shore = find_nontrivial_tight_cut(g, matchings, tie);
  if (!shore) {
    node.kind = is_bipartite(g) ? DecompositionNode::Kind::Brace : DecompositionNode::Kind::Brick;
    return node;
  }
  node.kind = DecompositionNode::Kind::Split;
  node.shore = shore;
  for (VertexSet side : {shore->members, shore->members.complement(g.vertex_count())}) {
    MultiGraph child = contract(g, side).graph;
    if (!is_matching_covered(child)) {
      throw GraphError(ErrorKind::InternalInconsistency, "tight cut contraction is not matching covered");
    }
    node.children.push_back(decompose(child, tie));
  }
  return node;
}

}  // namespace

std::vector<VertexId> TieBreak::ranking(int n) const {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  switch (this->order) {
    case VertexOrder::Identity: break;
    case VertexOrder::Reverse: std::reverse(order.begin(), order.end()); break;
    case VertexOrder::Shuffled: {
      std::mt19937 rng(seed ^ static_cast<std::uint32_t>(n * 2654435761U));
      std::shuffle(order.begin(), order.end(), rng);
      break;
    }
  }
  return order;
}

std::string TieBreak::describe() const {
  std::string s = order == VertexOrder::Identity ? "identity" : order == VertexOrder::Reverse ? "reverse" : "shuffled";
  if (order == VertexOrder::Shuffled) s += "(" + std::to_string(seed) + ")";
  s += largest_first ? "/largest-first" : "/smallest-first";
  return s;
}

bool is_tight_cut(const MultiGraph& g, const Shore& shore) {
  require_matching_covered(g);
  return meets_each_once(shore.cut, matching_masks(g));
}

std::optional<Shore> find_nontrivial_tight_cut(const MultiGraph& g, const std::vector<EdgeMask>& matchings,
                                               const TieBreak& tie) {
  const int n = g.vertex_count();
  if (n < 6) return std::nullopt;
  const auto rank = tie.ranking(n);
  std::vector<int> sizes;
  for (int k = 3; k <= n / 2; k += 2) sizes.push_back(k);
  if (tie.largest_first) std::reverse(sizes.begin(), sizes.end());

  for (int k : sizes) {
    // Combinations of positions in `rank`, lexicographic in ranked order.
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      VertexSet x;
      for (int p : pick) x.insert(rank[static_cast<std::size_t>(p)]);
      const EdgeMask cut = cut_mask(g, x);
      if (meets_each_once(cut, matchings)) return Shore{x, cut, false};
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

std::optional<Shore> find_nontrivial_tight_cut(const MultiGraph& g, const TieBreak& tie) {
  require_matching_covered(g);
  return find_nontrivial_tight_cut(g, matching_masks(g), tie);
}

DecompositionTree tight_cut_decomposition(const MultiGraph& g, const TieBreak& tie) {
  require_matching_covered(g);
  return DecompositionTree{decompose(g, tie)};
}

int brick_count(const MultiGraph& g) { return tight_cut_decomposition(g).brick_count(); }

std::vector<const DecompositionNode*> DecompositionTree::leaves() const {
  std::vector<const DecompositionNode*> out;
  std::vector<const DecompositionNode*> stack{&root};
  while (!stack.empty()) {
    const DecompositionNode* node = stack.back();
    stack.pop_back();
    if (node->is_leaf()) {
      out.push_back(node);
    } else {
      for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.push_back(&*it);
    }
  }
  return out;
}

int DecompositionTree::brick_count() const {
  const auto ls = leaves();
  return static_cast<int>(
      std::count_if(ls.begin(), ls.end(), [](const auto* l) { return l->kind == DecompositionNode::Kind::Brick; }));
}

int DecompositionTree::brace_count() const { return static_cast<int>(leaves().size()) - brick_count(); }

std::string DecompositionTree::trace() const {
  std::ostringstream out;
  trace_node(root, 0, out);
  return out.str();
}

void to_json(nlohmann::json& j, const DecompositionNode& node) {
  const char* kind = node.kind == DecompositionNode::Kind::Brick   ? "brick"
                     : node.kind == DecompositionNode::Kind::Brace ? "brace"
                                                                   : "split";
  j = nlohmann::json{{"kind", kind}, {"n", node.graph.vertex_count()}, {"edges", node.graph.edge_pairs()}};
  if (node.graph.has_names()) j["names"] = node.graph.names();
  if (node.shore) {
    j["shore"] = node.shore->members.members();
    j["cut"] = node.shore->cut_edges();
    j["children"] = node.children;
  }
}

void to_json(nlohmann::json& j, const DecompositionTree& tree) {
  j = nlohmann::json{{"brick_count", tree.brick_count()}, {"brace_count", tree.brace_count()}, {"root", tree.root}};
}

}  // namespace brickforge
