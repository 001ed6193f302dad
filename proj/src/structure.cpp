#include "brickforge/structure.hpp"

#include <algorithm>
#include <deque>

#include "brickforge/error.hpp"
#include "brickforge/matchings.hpp"
#include "brickforge/tightcut.hpp"

namespace brickforge {

namespace {

bool disconnects(const MultiGraph& g, VertexSet removed) {
  return g.vertex_count() - removed.size() >= 2 && !is_connected(g, removed);
}

// Visits every k-subset of 0..n-1 as a bitmask; stops when visit returns true.
template <class Visit>
bool any_subset(int n, int k, Visit&& visit) {
  if (k == 0) return visit(std::uint64_t{0});
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int p : pick) mask |= std::uint64_t{1} << p;
    if (visit(mask)) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
int local_connectivity(const MultiGraph& g, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  // Node 2v is v_in, 2v+1 is v_out; v_in -> v_out has capacity 1 except at s, t.
  const int nodes = 2 * n;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  auto in = [](VertexId v) { return 2 * v; };
  auto out = [](VertexId v) { return 2 * v + 1; };
  for (VertexId v = 0; v < n; ++v) {
    cap[static_cast<std::size_t>(in(v))][static_cast<std::size_t>(out(v))] = (v == s || v == t) ? n : 1;
    for (VertexId w : g.neighbours(v).members()) cap[static_cast<std::size_t>(out(v))][static_cast<std::size_t>(in(w))] = 1;
  }
  const int source = out(s);
  const int sink = in(t);
  int flow = 0;
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[static_cast<std::size_t>(sink)] == -1) {
      const int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nodes; ++y) {
        if (parent[static_cast<std::size_t>(y)] == -1 && cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] == -1) return flow;
    for (int y = sink; y != source; y = parent[static_cast<std::size_t>(y)]) {
      const int x = parent[static_cast<std::size_t>(y)];
      --cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      ++cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    }
    ++flow;
  }
}

}  // namespace

void to_json(nlohmann::json& j, const GraphClass& c) {
  j = nlohmann::json{{"connected", c.connected},
                     {"vertex_connectivity", c.vertex_connectivity},
                     {"bipartite", c.bipartite},
                     {"matching_covered", c.matching_covered},
                     {"bicritical", c.bicritical},
                     {"brick", c.brick},
                     {"brace", c.brace},
                     {"cubic", c.cubic}};
}

int vertex_connectivity_by_flow(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = n - 1;
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (!g.adjacent(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

int vertex_connectivity(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  const int exhaustive = std::min(3, n - 2);
  for (int k = 1; k <= exhaustive; ++k) {
    if (any_subset(n, k, [&](std::uint64_t mask) { return disconnects(g, VertexSet(mask)); })) return k;
  }
  // No separator up to n-2 vertices means every pair is adjacent.
  if (exhaustive == n - 2) return n - 1;
  return vertex_connectivity_by_flow(g);
}

bool is_matching_covered(const MultiGraph& g) {
  if (g.edge_count() == 0 || !is_connected(g)) return false;
  MatchingExistence exists(g);
  for (const Edge& e : g.edges()) {
    if (!exists(VertexSet{e.u, e.v})) return false;
  }
  return true;
}

bool is_bicritical(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  MatchingExistence exists(g);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!exists(VertexSet{u, v})) return false;
    }
  }
  return true;
}

bool is_brick(const MultiGraph& g) {
  return g.vertex_count() >= 4 && is_bicritical(g) && vertex_connectivity(g) >= 3;
}

GraphClass classify(const MultiGraph& g) {
  GraphClass c;
  c.connected = g.vertex_count() > 0 && is_connected(g);
  c.vertex_connectivity = vertex_connectivity(g);
  c.bipartite = is_bipartite(g);
  c.matching_covered = is_matching_covered(g);
  c.bicritical = is_bicritical(g);
  c.cubic = g.is_cubic();
  c.brick = g.vertex_count() >= 4 && c.bicritical && c.vertex_connectivity >= 3;
  if (c.matching_covered && (c.bipartite || g.vertex_count() <= kClassifyCrossCheckLimit)) {
    const bool no_tight_cut = !find_nontrivial_tight_cut(g).has_value();
    if (c.bipartite) {
      c.brace = no_tight_cut;
    } else if (no_tight_cut != c.brick) {
      throw GraphError(ErrorKind::InternalInconsistency,
                       "3-connected bicritical test and tight-cut definition disagree on brickness");
    }
  }
  return c;
}

}  // namespace brickforge
