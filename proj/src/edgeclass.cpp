#include "brickforge/edgeclass.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "brickforge/error.hpp"
#include "brickforge/matchings.hpp"
#include "brickforge/structure.hpp"
#include "brickforge/tightcut.hpp"

namespace brickforge {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::vector<EdgeId> select(const EdgeClassification& r, bool EdgeFlags::*flag) {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < r.edges.size(); ++e) {
    if (r.edges[e].*flag) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

void require_matching_covered(const MultiGraph& g) {
  if (!is_matching_covered(g)) throw GraphError(ErrorKind::NotMatchingCovered, "graph is not matching covered");
}

template <class Pick>
MultiGraph retract_with(const MultiGraph& input, Pick pick, RetractMode mode = RetractMode::KeepParallel) {
  if (input.vertex_count() < 2) throw GraphError(ErrorKind::Degenerate, "fewer than two vertices");
  MultiGraph g = input;
  while (g.vertex_count() >= 4) {
    if (mode == RetractMode::CollapseParallel) g = collapse_parallel_edges(g);
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 2 && g.neighbours(v).size() == 2) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    g = bicontract(g, pick(candidates));
  }
  if (g.edge_count() == 0) throw GraphError(ErrorKind::Degenerate, "retract has no edges");
  return g;
}

}  // namespace

std::vector<EdgeId> EdgeClassification::forcing() const { return select(*this, &EdgeFlags::forcing); }
std::vector<EdgeId> EdgeClassification::removable() const { return select(*this, &EdgeFlags::removable); }
std::vector<EdgeId> EdgeClassification::b_invariant() const { return select(*this, &EdgeFlags::b_invariant); }
std::vector<EdgeId> EdgeClassification::thin() const { return select(*this, &EdgeFlags::thin); }

bool is_removable(const MultiGraph& g, EdgeId e) {
  require_matching_covered(g);
  return is_matching_covered(delete_edge(g, e).graph);
}

bool is_b_invariant(const MultiGraph& g, EdgeId e) {
  require_matching_covered(g);
  const MultiGraph h = delete_edge(g, e).graph;
  return is_matching_covered(h) && brick_count(h) == brick_count(g);
}

MultiGraph bicontract(const MultiGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  if (g.degree(v) != 2) throw GraphError(ErrorKind::NotDegreeTwo, "vertex " + g.vertex_name(v));
  if (g.neighbours(v).size() != 2) {
    throw GraphError(ErrorKind::NeighborsCoincide, "both edges at " + g.vertex_name(v) + " go to one neighbour");
  }
  if (g.vertex_count() < 4) throw GraphError(ErrorKind::PreconditionViolated, "bicontraction needs four vertices");
  VertexSet x = g.neighbours(v);
  x.insert(v);
  return contract(g, x).graph;
}

MultiGraph retract(const MultiGraph& g, RetractMode mode) {
  return retract_with(g, [](const std::vector<VertexId>& c) { return c.front(); }, mode);
}

MultiGraph retract_highest_first(const MultiGraph& g) {
  return retract_with(g, [](const std::vector<VertexId>& c) { return c.back(); });
}

bool is_thin(const MultiGraph& g, EdgeId e, RetractMode mode) {
  if (!is_brick(g)) throw GraphError(ErrorKind::NotABrick, "thinness is defined for bricks only");
  const MultiGraph without = delete_edge(g, e).graph;
  if (!is_matching_covered(without)) return false;
  try {
    const MultiGraph r = retract(without, mode);
    return r.vertex_count() >= 4 && is_brick(r);
  } catch (const GraphError& err) {
    if (err.kind() == ErrorKind::Degenerate) return false;
    throw;
  }
}

std::vector<Pyramid> find_pyramids(const MultiGraph& g) {
  std::vector<Pyramid> out;
  for (EdgeId b = 0; b < g.edge_count(); ++b) {
    const VertexId y = g.edge(b).u;
    const VertexId z = g.edge(b).v;
    for (VertexId left : g.neighbours(y).members()) {
      if (left == z) continue;
      for (VertexId right : g.neighbours(z).members()) {
        if (right == y || right == left || !g.adjacent(left, right)) continue;
        VertexSet apexes(g.neighbours(left).bits() & g.neighbours(right).bits());
        for (VertexId skip : {y, z}) apexes.erase(skip);
        for (VertexId apex : apexes.members()) {
          Pyramid p{apex, left, right, y, z, b, {}};
          p.edges = {*g.find_edge(apex, left), *g.find_edge(apex, right), *g.find_edge(left, right),
                     *g.find_edge(left, y),    *g.find_edge(right, z),    b};
          out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

int matching_lattice_rank(const MultiGraph& g) {
  const auto pms = enumerate_perfect_matchings(g);
  const int cols = g.edge_count();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(pms.size());
  for (const Matching& m : pms) {
    std::vector<Rational> row(static_cast<std::size_t>(cols));
    for (EdgeId e : m.edges) row[static_cast<std::size_t>(e)] = 1;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](const auto& r) { return r[static_cast<std::size_t>(c)] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][static_cast<std::size_t>(c)] == 0) continue;
      const Rational factor = rows[r][static_cast<std::size_t>(c)] / p[static_cast<std::size_t>(c)];
      for (int k = c; k < cols; ++k) rows[r][static_cast<std::size_t>(k)] -= factor * p[static_cast<std::size_t>(k)];
    }
    ++rank;
  }
  return rank;
}

bool is_extremal(const MultiGraph& g) {
  require_matching_covered(g);
  return count_perfect_matchings(g) == matching_lattice_rank(g);
}

EdgeClassification edge_report(const MultiGraph& g) {
  if (!is_brick(g)) throw GraphError(ErrorKind::NotABrick, "edge report needs a brick");
  const auto pms = enumerate_perfect_matchings(g);
  const auto counts = edge_matching_counts(g, pms);
  const int m = g.edge_count();
  EdgeMask all;
  for (EdgeId e = 0; e < m; ++e) all.set(static_cast<std::size_t>(e));

  EdgeClassification report;
  report.edges.resize(static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) {
    EdgeFlags& f = report.edges[static_cast<std::size_t>(e)];
    f.pm_count = counts[static_cast<std::size_t>(e)];
    f.in_some_pm = f.pm_count > 0;
    f.forcing = f.pm_count == 1;

    // Perfect matchings of g - e are those of g avoiding e.
    EdgeMask covered;
    for (const Matching& pm : pms) {
      if (!pm.mask.test(static_cast<std::size_t>(e))) covered |= pm.mask;
    }
    EdgeMask others = all;
    others.reset(static_cast<std::size_t>(e));
    const MultiGraph without = delete_edge(g, e).graph;
    f.removable = (covered & others) == others && is_connected(without);
    f.b_invariant = f.removable && brick_count(without) == 1;
    f.thin = is_thin(g, e);

    if ((f.thin && !f.b_invariant) || (f.b_invariant && !f.removable) || (f.forcing && f.pm_count != 1)) {
      throw GraphError(ErrorKind::InternalInconsistency, "edge flag implications fail at " + g.edge_label(e));
    }
  }
  return report;
}

nlohmann::json to_json(const MultiGraph& g, const EdgeClassification& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeFlags& f = report.edges[static_cast<std::size_t>(e)];
    rows.push_back({{"id", e},
                    {"edge", g.edge_label(e)},
                    {"pm_count", f.pm_count},
                    {"in_some_pm", f.in_some_pm},
                    {"forcing", f.forcing},
                    {"removable", f.removable},
                    {"b_invariant", f.b_invariant},
                    {"thin", f.thin}});
  }
  return nlohmann::json{{"edges", rows},
                        {"summary",
                         {{"forcing", report.forcing().size()},
                          {"removable", report.removable().size()},
                          {"b_invariant", report.b_invariant().size()},
                          {"thin", report.thin().size()}}}};
}

std::string to_markdown(const MultiGraph& g, const EdgeClassification& report) {
  std::ostringstream out;
  auto mark = [](bool b) { return b ? "yes" : ""; };
  out << "| id | edge | PMs | forcing | removable | b-invariant | thin |\n";
  out << "|---:|------|----:|:-------:|:---------:|:-----------:|:----:|\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeFlags& f = report.edges[static_cast<std::size_t>(e)];
    out << "| " << e << " | " << g.edge_label(e) << " | " << f.pm_count << " | " << mark(f.forcing) << " | "
        << mark(f.removable) << " | " << mark(f.b_invariant) << " | " << mark(f.thin) << " |\n";
  }
  out << "\nforcing: " << report.forcing().size() << ", removable: " << report.removable().size()
      << ", b-invariant: " << report.b_invariant().size() << ", thin: " << report.thin().size() << "\n";
  return out.str();
}

}  // namespace brickforge
