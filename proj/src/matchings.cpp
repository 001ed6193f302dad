#include "brickforge/matchings.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {

class MatchingWalker {
 public:
  MatchingWalker(const MultiGraph& g, const std::function<bool(const EdgeMask&)>& visit) : g_(g), visit_(visit) {}

  // Returns false once the visitor asked to stop.
  bool walk(std::uint64_t uncovered) {
    if (uncovered == 0) return visit_(current_);
    const VertexId v = std::countr_zero(uncovered);
    if ((g_.neighbours(v).bits() & uncovered) == 0) return true;
    for (EdgeId e : g_.incident(v)) {
      const VertexId w = g_.edge(e).other(v);
      if (!((uncovered >> w) & 1U)) continue;
      current_.set(static_cast<std::size_t>(e));
      const bool go_on = walk(uncovered & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << w));
      current_.reset(static_cast<std::size_t>(e));
      if (!go_on) return false;
    }
    return true;
  }

 private:
  const MultiGraph& g_;
  const std::function<bool(const EdgeMask&)>& visit_;
  EdgeMask current_;
};

bool exists_pm(const MultiGraph& g, std::uint64_t uncovered, std::unordered_map<std::uint64_t, bool>& memo) {
  if (uncovered == 0) return true;
  if (std::popcount(uncovered) % 2 != 0) return false;
  if (auto it = memo.find(uncovered); it != memo.end()) return it->second;
  const VertexId v = std::countr_zero(uncovered);
  bool found = false;
  for (std::uint64_t nb = g.neighbours(v).bits() & uncovered; nb != 0 && !found; nb &= nb - 1) {
    const VertexId w = std::countr_zero(nb);
    found = exists_pm(g, uncovered & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << w), memo);
  }
  memo.emplace(uncovered, found);
  return found;
}

}  // namespace

void for_each_perfect_matching(const MultiGraph& g, VertexSet removed,
                               const std::function<bool(const EdgeMask&)>& visit) {
  const std::uint64_t uncovered = VertexSet::full(g.vertex_count()).bits() & ~removed.bits();
  if (std::popcount(uncovered) % 2 != 0) return;
  MatchingWalker walker(g, visit);
  walker.walk(uncovered);
}

std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, {}, [&](const EdgeMask& m) {
    out.push_back({edge_ids(m), m});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
  return out;
}

std::int64_t count_perfect_matchings(const MultiGraph& g, VertexSet removed, std::int64_t limit) {
  std::int64_t count = 0;
  for_each_perfect_matching(g, removed, [&](const EdgeMask&) { return ++count < limit; });
  return count;
}

bool has_perfect_matching(const MultiGraph& g, VertexSet removed) {
  std::unordered_map<std::uint64_t, bool> memo;
  return exists_pm(g, VertexSet::full(g.vertex_count()).bits() & ~removed.bits(), memo);
}

bool MatchingExistence::operator()(VertexSet removed) {
  return exists_pm(g_, VertexSet::full(g_.vertex_count()).bits() & ~removed.bits(), memo_);
}

std::optional<Matching> has_unique_perfect_matching(const MultiGraph& g) {
  std::optional<Matching> first;
  int seen = 0;
  for_each_perfect_matching(g, {}, [&](const EdgeMask& m) {
    if (++seen == 1) first = Matching{edge_ids(m), m};
    return seen < 2;
  });
  if (seen != 1) return std::nullopt;
  return first;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> out;
  int timer = 0;
  // Iterative DFS; frames hold (vertex, edge used to enter, next incidence index).
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const VertexId w = g.edge(e).other(f.v);
        if (disc[static_cast<std::size_t>(w)] == -1) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const VertexId parent = stack.back().v;
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(parent)]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<EdgeId> kotzig_witness(const MultiGraph& g) {
  if (!is_connected(g)) throw GraphError(ErrorKind::PreconditionViolated, "graph is disconnected");
  const auto pm = has_unique_perfect_matching(g);
  if (!pm) throw GraphError(ErrorKind::PreconditionViolated, "perfect matching is not unique");
  for (EdgeId b : bridges(g)) {
    if (pm->mask.test(static_cast<std::size_t>(b))) return b;
  }
  return std::nullopt;
}

std::vector<std::int64_t> edge_matching_counts(const MultiGraph& g, const std::vector<Matching>& matchings) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g.edge_count()), 0);
  for (const Matching& m : matchings) {
    for (EdgeId e : m.edges) ++counts[static_cast<std::size_t>(e)];
  }
  return counts;
}

std::vector<std::int64_t> edge_matching_counts(const MultiGraph& g) {
  return edge_matching_counts(g, enumerate_perfect_matchings(g));
}

std::vector<EdgeId> forcing_edges(const MultiGraph& g) {
  std::vector<EdgeId> out;
  const auto counts = edge_matching_counts(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (counts[static_cast<std::size_t>(e)] == 1) out.push_back(e);
  }
  return out;
}

bool is_perfect_matching(const MultiGraph& g, const EdgeMask& m) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if ((m & g.incident_mask(v)).count() != 1) return false;
  }
  return true;
}

}  // namespace brickforge
