#include "brickforge/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "brickforge/atlas.hpp"
#include "brickforge/canon.hpp"
#include "brickforge/edgeclass.hpp"
#include "brickforge/error.hpp"
#include "brickforge/matchings.hpp"
#include "brickforge/parallel.hpp"
#include "brickforge/structure.hpp"
#include "brickforge/tightcut.hpp"
#include "brickforge/version.hpp"
#include "brickforge/ydelta.hpp"

namespace brickforge {

namespace {

struct CorpusGraph {
  MultiGraph graph;
  CanonicalLabel label;
  bool k4_based = true;
  std::string name;
  GraphClass cls;
  EdgeClassification edges;

  std::string display() const { return name.empty() ? "#" + fnv1a_hex(label.bytes) : name; }
};

struct Corpus {
  std::vector<CorpusGraph> graphs;
  std::string description;
  std::string hash;
};

Corpus prepare(const std::vector<CatalogEntry>& catalog, int n_max, const std::string& source) {
  Corpus c;
  std::set<CanonicalLabel> seen;
  for (const CatalogEntry& e : catalog) {
    if (e.vertex_count > n_max || !seen.insert(e.label).second) continue;
    c.graphs.push_back({e.graph, e.label, true, {}, {}, {}});
  }
  const std::size_t generated = c.graphs.size();
  const MultiGraph& petersen = named_graph("Petersen").graph;
  if (CanonicalLabel label = canonical_label(petersen); seen.insert(label).second) {
    c.graphs.push_back({canonical_form(petersen), std::move(label), false, {}, {}, {}});
  }
  std::sort(c.graphs.begin(), c.graphs.end(), [](const CorpusGraph& a, const CorpusGraph& b) {
    if (a.graph.vertex_count() != b.graph.vertex_count()) return a.graph.vertex_count() < b.graph.vertex_count();
    return a.label < b.label;
  });
  parallel_for(c.graphs.size(), [&](std::size_t i) {
    CorpusGraph& g = c.graphs[i];
    g.name = identify(g.graph).value_or("");
    g.cls = classify(g.graph);
    if (g.cls.brick) g.edges = edge_report(g.graph);
  });

  std::string labels;
  for (const CorpusGraph& g : c.graphs) labels += g.label.hex() + "\n";
  c.hash = fnv1a_hex(labels);
  c.description = source + ", n <= " + std::to_string(n_max) + " (" + std::to_string(generated) +
                  " classes) plus Petersen";
  return c;
}

std::vector<CatalogEntry> generated_catalog(int n_max) {
  return generate_k4_based(n_max, GenerateOptions{.classify = false});
}

VerificationReport start_report(const std::string& harness, int n_max, const Corpus& c) {
  VerificationReport r;
  r.harness = harness;
  r.n_max = n_max;
  r.corpus = c.description;
  r.corpus_size = c.graphs.size();
  r.corpus_hash = c.hash;
  return r;
}

GraphVerdict verdict_for(const CorpusGraph& g, bool EdgeFlags::*property) {
  GraphVerdict v;
  v.name = g.name;
  v.fingerprint = fnv1a_hex(g.label.bytes);
  v.label = g.label.hex();
  v.vertex_count = g.graph.vertex_count();
  v.brick = g.cls.brick;
  if (!v.brick) return v;
  v.forcing = static_cast<int>(g.edges.forcing().size());
  v.b_invariant = static_cast<int>(g.edges.b_invariant().size());
  v.thin = static_cast<int>(g.edges.thin().size());
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    const EdgeFlags& f = g.edges.edges[static_cast<std::size_t>(e)];
    if (f.*property && !f.forcing) v.offending.push_back(g.graph.edge_label(e));
  }
  v.holds = v.offending.empty();
  return v;
}

// Property holders against the theorem list, restricted to what the corpus
// can contain (Petersen is always injected).
VerificationReport holder_harness(const std::string& harness, const std::string& property_name, const Corpus& c,
                                  int n_max, bool EdgeFlags::*property) {
  VerificationReport r = start_report(harness, n_max, c);
  for (const std::string& name : theorem_graphs()) {
    if (name == "Petersen" || named_graph(name).graph.vertex_count() <= n_max) r.expected_holders.push_back(name);
  }
  CheckTally bricks{"corpus_graphs_are_bricks", 0, 0};
  CheckTally holders{"holders_match_theorem_list", 0, 0};
  std::set<std::string> found;
  for (const CorpusGraph& g : c.graphs) {
    GraphVerdict v = verdict_for(g, property);
    ++bricks.instances;
    ++holders.instances;
    if (!v.brick) {
      ++bricks.failures;
      r.counterexamples.push_back(v.display_name() + ": not a brick");
    } else if (v.holds) {
      r.holders.push_back(v.display_name());
      found.insert(v.display_name());
      if (std::find(r.expected_holders.begin(), r.expected_holders.end(), v.display_name()) ==
          r.expected_holders.end()) {
        ++holders.failures;
        r.counterexamples.push_back(v.display_name() + " (n=" + std::to_string(v.vertex_count) + "): every " +
                                    property_name + " edge is forcing, but it is not in the theorem list");
      }
    }
    r.verdicts.push_back(std::move(v));
  }
  for (const std::string& name : r.expected_holders) {
    if (found.contains(name)) continue;
    ++holders.failures;
    const auto it = std::find_if(r.verdicts.begin(), r.verdicts.end(),
                                 [&](const GraphVerdict& v) { return v.name == name; });
    if (it == r.verdicts.end()) {
      r.counterexamples.push_back(name + ": in the theorem list but missing from the corpus");
    } else {
      std::string edges;
      for (const std::string& e : it->offending) edges += (edges.empty() ? "" : ", ") + e;
      r.counterexamples.push_back(name + ": in the theorem list but has non-forcing " + property_name +
                                  " edges " + edges);
    }
  }
  r.checks = {bricks, holders};
  return r;
}

// ---------------------------------------------------------------------------
// Lemma suite plumbing.

class Ledger {
 public:
  void record(const std::string& check, bool ok, const std::function<std::string()>& what) {
    CheckTally& t = tally(check);
    ++t.instances;
    if (!ok) {
      ++t.failures;
      failures_.push_back(check + ": " + what());
    }
  }

  // Runs `body`, turning an unexpected GraphError into a failure of `check`.
  template <class Body>
  void guarded(const std::string& check, const std::string& who, Body&& body) {
    try {
      body();
    } catch (const GraphError& err) {
      record(check, false, [&] { return who + ": " + err.what(); });
    }
  }

  void touch(const std::string& check) { tally(check); }

  void merge(const Ledger& other) {
    for (const CheckTally& t : other.tallies_) {
      CheckTally& mine = tally(t.name);
      mine.instances += t.instances;
      mine.failures += t.failures;
    }
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  }

  const std::vector<CheckTally>& tallies() const { return tallies_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  CheckTally& tally(const std::string& check) {
    for (CheckTally& t : tallies_) {
      if (t.name == check) return t;
    }
    tallies_.push_back({check, 0, 0});
    return tallies_.back();
  }

  std::vector<CheckTally> tallies_;
  std::vector<std::string> failures_;
};

const std::vector<std::string> kLemmaChecks{
    "cubic_brick",
    "kotzig_bridge",
    "nonforcing_heredity",
    "forcing_endpoint_destruction",
    "forcing_correspondence",
    "forcing_monotonicity",
    "forcing_at_most_six",
    "pyramid_bottom_b_invariant",
    "pyramid_cut_tight",
    "pyramid_contraction_brick",
    "pyramid_heredity",
    "pyramid_nonforcing_heredity",
    "generalized_ydelta_octahedron",
    "generalized_ydelta_w5",
    "generalized_ydelta_w5_based",
    "generalized_ydelta_pyramid",
    "r0_forcing_free",
    "triangle_contraction_brick",
    "extremal_iff_b_invariant_forcing",
    "theorem_1_1_b_invariant_exists",
    "bicorn_unique",
    "fixture_cubic_brick",
    "stated_forcing",
    "stated_b_invariant_not_forcing",
    "claim_tight_cut_R2",
    "claim_tight_cut_R4",
};

bool is_forcing_edge(const MultiGraph& g, EdgeId e) {
  const Edge& ends = g.edge(e);
  return count_perfect_matchings(g, VertexSet{ends.u, ends.v}, 2) == 1;
}

// b-invariance for an edge of a brick: G - e matching covered with one brick.
bool b_invariant_in_brick(const MultiGraph& g, EdgeId e) {
  const MultiGraph h = delete_edge(g, e).graph;
  return is_matching_covered(h) && brick_count(h) == 1;
}

std::string at(const std::string& who, const MultiGraph& g, EdgeId e) { return who + " edge " + g.edge_label(e); }

// Every component of h must contain a bridge of its unique perfect matching.
void kotzig_instance(const MultiGraph& h, const std::string& who, Ledger& out) {
  for (VertexSet comp : components(h)) {
    const MultiGraph sub = remove_vertices(h, comp.complement(h.vertex_count())).graph;
    const auto pm = has_unique_perfect_matching(sub);
    const auto w = pm ? kotzig_witness(sub) : std::nullopt;
    const bool ok = w && pm->mask.test(static_cast<std::size_t>(*w)) && !is_connected(delete_edge(sub, *w).graph);
    out.record("kotzig_bridge", ok, [&] { return who + ": no bridge in the unique perfect matching"; });
  }
}

void kotzig_checks(const MultiGraph& g, const std::string& who, Ledger& out) {
  const int m = g.edge_count();
  for (EdgeId a = 0; a < m; ++a) {
    const VertexSet ea{g.edge(a).u, g.edge(a).v};
    if (count_perfect_matchings(g, ea, 2) == 1) {
      kotzig_instance(remove_vertices(g, ea).graph, at(who, g, a), out);
    }
    for (EdgeId b = a + 1; b < m; ++b) {
      const VertexSet both(ea.bits() | VertexSet{g.edge(b).u, g.edge(b).v}.bits());
      if (both.size() != 4 || count_perfect_matchings(g, both, 2) != 1) continue;
      kotzig_instance(remove_vertices(g, both).graph, at(who, g, a) + " and " + g.edge_label(b), out);
    }
  }
}

VertexId third_corner(const CorrespondenceMap& map, std::size_t triangle_edge) {
  // triangle_edges = x1x2, x2x3, x1x3
  static constexpr std::size_t kOpposite[3] = {2, 0, 1};
  return map.triangle[kOpposite[triangle_edge]];
}

void ydelta_checks(const CorpusGraph& cg, Ledger& out) {
  const MultiGraph& g = cg.graph;
  const auto& flags = cg.edges.edges;
  const auto forcing_in_g = cg.edges.forcing().size();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string who = cg.display() + " at vertex " + std::to_string(v);
    out.guarded("forcing_correspondence", who, [&] {
      const YDeltaResult r = y_to_delta(g, v);
      const auto counts = edge_matching_counts(r.graph);
      std::vector<std::optional<EdgeId>> preimage(static_cast<std::size_t>(r.graph.edge_count()));
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeId image = r.map.edge_map[static_cast<std::size_t>(e)];
        preimage[static_cast<std::size_t>(image)] = e;
        const bool image_forcing = counts[static_cast<std::size_t>(image)] == 1;
        const bool at_v = g.edge(e).u == v || g.edge(e).v == v;
        if (!flags[static_cast<std::size_t>(e)].forcing) {
          out.record("nonforcing_heredity", !image_forcing, [&] { return at(who, g, e) + " became forcing"; });
        } else if (at_v) {
          out.record("forcing_endpoint_destruction", !image_forcing,
                     [&] { return at(who, g, e) + " stayed forcing after expanding its end"; });
        }
      }
      std::set<EdgeId> used;
      std::size_t forcing_in_child = 0;
      for (EdgeId f = 0; f < r.graph.edge_count(); ++f) {
        if (counts[static_cast<std::size_t>(f)] != 1) continue;
        ++forcing_in_child;
        std::optional<EdgeId> pre = preimage[static_cast<std::size_t>(f)];
        const auto tri = std::find(r.map.triangle_edges.begin(), r.map.triangle_edges.end(), f);
        if (tri != r.map.triangle_edges.end()) {
          const VertexId corner = third_corner(r.map, static_cast<std::size_t>(tri - r.map.triangle_edges.begin()));
          for (EdgeId out_edge : r.graph.incident(corner)) {
            if (preimage[static_cast<std::size_t>(out_edge)]) pre = preimage[static_cast<std::size_t>(out_edge)];
          }
        }
        const bool ok = pre && flags[static_cast<std::size_t>(*pre)].forcing && used.insert(*pre).second;
        out.record("forcing_correspondence", ok,
                   [&] { return who + ": forcing edge " + r.graph.edge_label(f) + " has no forcing preimage"; });
      }
      out.record("forcing_monotonicity", forcing_in_child <= forcing_in_g,
                 [&] { return who + ": forcing count grew"; });
    });
  }
}

MultiGraph apply_split(const MultiGraph& g, VertexId v, const DegreeFourSplit& s) {
  return generalized_y_to_delta(g, v, s).graph;
}

// Generalized Y->delta at every degree-4 vertex, repeated while the result
// stays within `limit` vertices; every result must be a brick.
void generalized_checks(const MultiGraph& base, int limit, const std::string& check, const std::string& who,
                        Ledger& out) {
  std::set<CanonicalLabel> seen{canonical_label(base)};
  std::vector<MultiGraph> frontier{base};
  while (!frontier.empty()) {
    std::vector<MultiGraph> next;
    for (const MultiGraph& g : frontier) {
      if (g.vertex_count() + 2 > limit) continue;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4) continue;
        for (const DegreeFourSplit& s : degree_four_splits(g, v)) {
          out.guarded(check, who, [&] {
            MultiGraph child = apply_split(g, v, s);
            out.record(check, is_brick(child), [&] { return who + ": generalized Y->delta result is not a brick"; });
            if (seen.insert(canonical_label(child)).second) next.push_back(std::move(child));
          });
        }
      }
    }
    frontier = std::move(next);
  }
}

void pyramid_checks(const CorpusGraph& cg, int n_max, Ledger& out) {
  const MultiGraph& g = cg.graph;
  const auto& flags = cg.edges.edges;
  std::set<EdgeId> bottoms;
  for (const Pyramid& p : find_pyramids(g)) {
    const std::string who = at(cg.display(), g, p.bottom);
    out.record("pyramid_bottom_b_invariant", flags[static_cast<std::size_t>(p.bottom)].b_invariant,
               [&] { return who + " is a pyramid bottom but not b-invariant"; });
    bottoms.insert(p.bottom);

    out.guarded("pyramid_cut_tight", who, [&] {
      const MultiGraph del = delete_edge(g, p.bottom).graph;
      auto third = [&](VertexId end, VertexId a, VertexId b) {
        VertexSet s = g.neighbours(end);
        s.erase(a);
        s.erase(b);
        return s.members().front();
      };
      const VertexId u5 = third(p.y, p.left, p.z);
      const VertexId u6 = third(p.z, p.right, p.y);
      const VertexSet x1{p.left, p.y, u5};
      const VertexSet x2{p.right, p.z, u6};
      const bool tight = (x1.bits() & x2.bits()) == 0 && is_tight_cut(del, edge_cut(del, x1)) &&
                         is_tight_cut(del, edge_cut(del, x2));
      out.record("pyramid_cut_tight", tight, [&] { return who + ": shores around the bottom are not tight"; });
      if (!tight) return;
      const Contraction c1 = contract(del, x1);
      VertexSet x2_after;
      for (VertexId v : x2.members()) x2_after.insert(c1.vertex_map[static_cast<std::size_t>(v)]);
      const MultiGraph contracted = contract(c1.graph, x2_after).graph;
      const bool brick = is_brick(contracted);
      out.record("pyramid_contraction_brick", brick, [&] { return who + ": contracted graph is not a brick"; });
      if (brick) generalized_checks(contracted, contracted.vertex_count() + 2, "generalized_ydelta_pyramid", who, out);
    });
  }

  // Heredity: expand anywhere except the ends of the bottom edge. Descendants
  // are deduplicated up to isomorphism fixing the bottom edge's ends.
  for (EdgeId b : bottoms) {
    const bool nonforcing = !flags[static_cast<std::size_t>(b)].forcing;
    const std::string who = at(cg.display(), g, b);
    auto coloured = [](const MultiGraph& h, EdgeId e) {
      std::vector<int> colours(static_cast<std::size_t>(h.vertex_count()), 0);
      colours[static_cast<std::size_t>(h.edge(e).u)] = 1;
      colours[static_cast<std::size_t>(h.edge(e).v)] = 1;
      return canonical_label(h, colours);
    };
    std::set<CanonicalLabel> seen{coloured(g, b)};
    std::vector<std::pair<MultiGraph, EdgeId>> frontier{{g, b}};
    while (!frontier.empty()) {
      std::vector<std::pair<MultiGraph, EdgeId>> next;
      for (const auto& [h, e] : frontier) {
        if (h.vertex_count() + 2 > n_max) continue;
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
          if (v == h.edge(e).u || v == h.edge(e).v) continue;
          YDeltaResult r = y_to_delta(h, v);
          const EdgeId image = r.map.edge_map[static_cast<std::size_t>(e)];
          if (!seen.insert(coloured(r.graph, image)).second) continue;
          out.guarded("pyramid_heredity", who, [&] {
            out.record("pyramid_heredity", b_invariant_in_brick(r.graph, image),
                       [&] { return who + ": image not b-invariant in a descendant"; });
            if (nonforcing) {
              out.record("pyramid_nonforcing_heredity", !is_forcing_edge(r.graph, image),
                         [&] { return who + ": image forcing in a descendant"; });
            }
          });
          next.emplace_back(std::move(r.graph), image);
        }
      }
      frontier = std::move(next);
    }
  }
}

void per_graph_checks(const CorpusGraph& cg, int n_max, Ledger& out) {
  const MultiGraph& g = cg.graph;
  const std::string who = cg.display();
  out.record("cubic_brick", cg.cls.brick && cg.cls.cubic, [&] { return who + " is not a cubic brick"; });
  if (!cg.cls.brick) return;
  const std::size_t forcing = cg.edges.forcing().size();
  bool holds = true;
  for (const EdgeFlags& f : cg.edges.edges) holds = holds && (!f.b_invariant || f.forcing);

  out.guarded("extremal_iff_b_invariant_forcing", who, [&] {
    out.record("extremal_iff_b_invariant_forcing", is_extremal(g) == holds,
               [&] { return who + ": extremality disagrees with the b-invariant/forcing property"; });
  });
  out.guarded("kotzig_bridge", who, [&] { kotzig_checks(g, who, out); });
  if (!cg.k4_based) return;

  out.record("forcing_at_most_six", forcing <= 6, [&] { return who + " has " + std::to_string(forcing) + " forcing edges"; });
  if (g.vertex_count() + 2 <= n_max) ydelta_checks(cg, out);
  if (g.vertex_count() >= 8) out.guarded("pyramid_heredity", who, [&] { pyramid_checks(cg, n_max, out); });
  if (g.vertex_count() > 4) {
    for (const auto& t : triangles(g)) {
      out.guarded("triangle_contraction_brick", who, [&] {
        const MultiGraph h = contract_triangle(g, t);
        out.record("triangle_contraction_brick", h.is_cubic() && is_brick(h),
                   [&] { return who + ": contracting a triangle loses the brick property"; });
      });
    }
  }
}

void tight_cut_claim(const std::string& fixture, const NamePair& edge, const std::vector<std::string>& shore,
                     Ledger& out, std::vector<MultiGraph>& w5_based) {
  const std::string check = "claim_tight_cut_" + fixture;
  out.guarded(check, fixture, [&] {
    const MultiGraph& g = named_graph(fixture).graph;
    const MultiGraph del = delete_edge(g, edge_by_names(g, edge)).graph;
    VertexSet x;
    for (const std::string& name : shore) x.insert(*del.find_vertex(name));
    const bool tight = is_matching_covered(del) && is_tight_cut(del, edge_cut(del, x));
    const MultiGraph inner = contract(del, x.complement(del.vertex_count())).graph;
    const MultiGraph outer = contract(del, x).graph;
    const bool ok = tight && is_bipartite(inner) && is_matching_covered(inner) && is_brick(outer);
    out.record(check, ok, [&] { return fixture + ": the shore around " + edge.first + "-" + edge.second +
                                       " does not give a tight cut with a brick side"; });
    if (ok) w5_based.push_back(outer);
  });
}

void fixture_checks(int n_max, Ledger& out) {
  for (const std::string& name : atlas_names()) {
    const bool theorem = std::find(theorem_graphs().begin(), theorem_graphs().end(), name) != theorem_graphs().end();
    const bool obstruction = name == "R0" || std::find(obstruction_graphs().begin(), obstruction_graphs().end(),
                                                       name) != obstruction_graphs().end();
    if (!theorem && !obstruction) continue;
    const NamedGraph& ng = named_graph(name);
    const MultiGraph& g = ng.graph;
    out.record("fixture_cubic_brick", g.is_cubic() && is_brick(g), [&] { return name + " is not a cubic brick"; });
    const auto forcing = forcing_edges(g);
    for (const NamePair& e : ng.stated_forcing) {
      const EdgeId id = edge_by_names(g, e);
      out.record("stated_forcing", std::find(forcing.begin(), forcing.end(), id) != forcing.end(),
                 [&] { return name + ": " + e.first + "-" + e.second + " is not forcing"; });
    }
    for (const NamePair& e : ng.stated_b_invariant_not_forcing) {
      const EdgeId id = edge_by_names(g, e);
      out.record("stated_b_invariant_not_forcing", is_b_invariant(g, id) && !is_forcing_edge(g, id),
                 [&] { return name + ": " + e.first + "-" + e.second + " is not b-invariant and non-forcing"; });
    }
  }
  // Counts the text gives exactly.
  out.record("stated_forcing", forcing_edges(named_graph("K4").graph).size() == 6, [] { return "K4: not six forcing edges"; });
  out.record("stated_forcing", forcing_edges(named_graph("G5").graph).size() == 3, [] { return "G5: not three forcing edges"; });

  // R0 and everything built on it, up to n_max.
  {
    const MultiGraph& r0 = named_graph("R0").graph;
    std::set<CanonicalLabel> seen{canonical_label(r0)};
    std::vector<MultiGraph> frontier{r0};
    out.record("r0_forcing_free", forcing_edges(r0).empty(), [] { return "R0 has a forcing edge"; });
    while (!frontier.empty()) {
      std::vector<MultiGraph> next;
      for (const MultiGraph& h : frontier) {
        if (h.vertex_count() + 2 > n_max) continue;
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
          MultiGraph child = y_to_delta(h, v).graph;
          if (!seen.insert(canonical_label(child)).second) continue;
          out.record("r0_forcing_free", forcing_edges(child).empty(),
                     [&] { return "a graph with base R0 on " + std::to_string(child.vertex_count()) +
                                  " vertices has a forcing edge"; });
          next.push_back(std::move(child));
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<MultiGraph> w5_based;
  tight_cut_claim("R2", {"wp", "xp"}, {"w", "wp", "x", "xp", "u3"}, out, w5_based);
  tight_cut_claim("R4", {"u2", "u3"}, {"u1", "u2", "u3", "vp", "xp"}, out, w5_based);

  const MultiGraph& octahedron = named_graph("octahedron").graph;
  generalized_checks(octahedron, std::max(n_max, octahedron.vertex_count() + 4), "generalized_ydelta_octahedron",
                     "octahedron", out);
  const MultiGraph& w5 = named_graph("W5").graph;
  out.record("generalized_ydelta_w5", is_brick(w5), [] { return "W5 is not a brick"; });
  generalized_checks(w5, std::max(n_max, w5.vertex_count() + 4), "generalized_ydelta_w5", "W5", out);
  for (const MultiGraph& h : w5_based) {
    out.record("generalized_ydelta_w5_based", is_brick(h), [] { return "a W5-based contraction is not a brick"; });
    generalized_checks(h, h.vertex_count() + 2, "generalized_ydelta_w5_based", "W5-based contraction", out);
  }
}

}  // namespace

std::string GraphVerdict::display_name() const { return name.empty() ? "#" + fingerprint : name; }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kDigits[h & 15];
  return out;
}

VerificationReport verify_main_theorem(int n_max) {
  return holder_harness("main", "b-invariant", prepare(generated_catalog(n_max), n_max, "K4-based catalog"), n_max,
                        &EdgeFlags::b_invariant);
}

VerificationReport verify_main_theorem(const std::vector<CatalogEntry>& catalog, int n_max) {
  return holder_harness("main", "b-invariant", prepare(catalog, n_max, "catalog file"), n_max,
                        &EdgeFlags::b_invariant);
}

namespace {

VerificationReport thin_note(const Corpus& corpus, int n_max) {
  VerificationReport r = holder_harness("thin", "thin", corpus, n_max, &EdgeFlags::thin);
  Ledger ledger;
  CheckTally informational{"info_obstruction_b_invariant_edges_thin_collapsed_retract", 0, 0};
  auto check_fixture = [&](const std::string& name, const std::string& check) {
    const MultiGraph& g = named_graph(name).graph;
    const EdgeClassification report = edge_report(g);
    for (EdgeId e : report.b_invariant()) {
      ledger.record(check, report.edges[static_cast<std::size_t>(e)].thin,
                    [&] { return name + ": b-invariant edge " + g.edge_label(e) + " is not thin"; });
    }
    return report;
  };
  for (const std::string& name : obstruction_graphs()) {
    const EdgeClassification report = check_fixture(name, "obstruction_b_invariant_edges_thin");
    // Informational: the same statement with parallel edges collapsed during
    // the retract. Tallied, never a counterexample.
    const MultiGraph& g = named_graph(name).graph;
    for (EdgeId e : report.b_invariant()) {
      ++informational.instances;
      if (!is_thin(g, e, RetractMode::CollapseParallel)) ++informational.failures;
    }
    bool thin_nonforcing = false;
    for (const EdgeFlags& f : report.edges) thin_nonforcing = thin_nonforcing || (f.thin && !f.forcing);
    ledger.record("obstruction_has_thin_nonforcing_edge", thin_nonforcing,
                  [&] { return name + ": every thin edge is forcing"; });
  }
  for (const std::string& name : theorem_graphs()) {
    if (name[0] == 'G') check_fixture(name, "theorem_graph_b_invariant_edges_thin");
  }
  r.checks.insert(r.checks.end(), ledger.tallies().begin(), ledger.tallies().end());
  r.checks.push_back(informational);
  r.counterexamples.insert(r.counterexamples.end(), ledger.failures().begin(), ledger.failures().end());
  return r;
}

VerificationReport lemma_suite(const Corpus& corpus, int n_max) {
  VerificationReport r = start_report("lemmas", n_max, corpus);
  std::vector<Ledger> per_graph(corpus.graphs.size());
  parallel_for(corpus.graphs.size(), [&](std::size_t i) {
    Ledger& l = per_graph[i];
    l.guarded("cubic_brick", corpus.graphs[i].display(), [&] { per_graph_checks(corpus.graphs[i], n_max, l); });
  });

  Ledger all;
  for (const std::string& check : kLemmaChecks) all.touch(check);
  for (const Ledger& l : per_graph) all.merge(l);

  // Corpus-wide statements.
  int single = 0;
  bool single_is_bicorn = true;
  for (const CorpusGraph& g : corpus.graphs) {
    if (!g.cls.brick) continue;
    const std::size_t b = g.edges.b_invariant().size();
    const bool exception = g.name == "K4" || g.name == "C6bar" || g.name == "Petersen";
    all.record("theorem_1_1_b_invariant_exists", exception ? b == 0 : b >= 1, [&] {
      return g.display() + " has " + std::to_string(b) + " b-invariant edges";
    });
    if (b == 1) {
      ++single;
      single_is_bicorn = single_is_bicorn && g.name == "G2";
    }
  }
  if (n_max >= 8) {
    all.record("bicorn_unique", single == 1 && single_is_bicorn,
               [&] { return std::to_string(single) + " graphs with exactly one b-invariant edge"; });
  }
  Ledger fixtures;
  fixtures.guarded("fixture_cubic_brick", "fixtures", [&] { fixture_checks(n_max, fixtures); });
  all.merge(fixtures);

  r.checks = all.tallies();
  r.counterexamples = all.failures();
  return r;
}

}  // namespace

VerificationReport verify_thin_note(int n_max) {
  return thin_note(prepare(generated_catalog(n_max), n_max, "K4-based catalog"), n_max);
}

VerificationReport verify_thin_note(const std::vector<CatalogEntry>& catalog, int n_max) {
  return thin_note(prepare(catalog, n_max, "catalog file"), n_max);
}

}  // namespace brickforge

namespace brickforge {

VerificationReport verify_lemma_suite(int n_max) {
  if (n_max < 8) throw GraphError(ErrorKind::PreconditionViolated, "the lemma suite needs n_max >= 8");
  return lemma_suite(prepare(generated_catalog(n_max), n_max, "K4-based catalog"), n_max);
}

VerificationReport verify_lemma_suite(const std::vector<CatalogEntry>& catalog, int n_max) {
  if (n_max < 8) throw GraphError(ErrorKind::PreconditionViolated, "the lemma suite needs n_max >= 8");
  return lemma_suite(prepare(catalog, n_max, "catalog file"), n_max);
}

SufficiencyResult sufficiency_check(std::string_view name) {
  const NamedGraph& ng = named_graph(name);
  const MultiGraph& g = ng.graph;
  SufficiencyResult out;
  out.name = ng.name;
  const auto pms = enumerate_perfect_matchings(g);
  const auto counts = edge_matching_counts(g, pms);
  std::vector<std::optional<bool>> removable(static_cast<std::size_t>(g.edge_count()));
  EdgeMask s;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.forcing += counts[static_cast<std::size_t>(e)] == 1;
  for (const Matching& pm : pms) {
    for (EdgeId e : pm.edges) {
      if (counts[static_cast<std::size_t>(e)] != 1) continue;
      // pm is the unique perfect matching through the forcing edge e.
      s |= pm.mask;
      for (EdgeId other : pm.edges) {
        if (other == e) continue;
        auto& known = removable[static_cast<std::size_t>(other)];
        if (!known) known = is_removable(g, other);
        if (*known) out.claim_failures.push_back(g.edge_label(other) + " (with forcing " + g.edge_label(e) + ")");
      }
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!s.test(static_cast<std::size_t>(e))) out.uncovered.push_back(g.edge_label(e));
  }
  return out;
}

bool verify_sufficiency_union(std::string_view name) {
  const SufficiencyResult r = sufficiency_check(name);
  return r.union_is_all() && r.claim_holds();
}

VerificationReport verify_sufficiency() {
  VerificationReport r;
  r.harness = "sufficiency";
  r.corpus = "atlas graphs G2..G8";
  std::string labels;
  CheckTally cover{"union_covers_all_edges", 0, 0};
  CheckTally claim{"pm_partners_of_forcing_edges_not_removable", 0, 0};
  for (const std::string& name : theorem_graphs()) {
    if (name[0] != 'G') continue;
    const MultiGraph& g = named_graph(name).graph;
    const CanonicalLabel label = canonical_label(g);
    labels += label.hex() + "\n";
    r.n_max = std::max(r.n_max, g.vertex_count());
    const SufficiencyResult s = sufficiency_check(name);
    GraphVerdict v;
    v.name = name;
    v.fingerprint = fnv1a_hex(label.bytes);
    v.label = label.hex();
    v.vertex_count = g.vertex_count();
    v.brick = is_brick(g);
    v.forcing = s.forcing;
    v.holds = s.union_is_all() && s.claim_holds();
    for (const auto& e : s.uncovered) v.offending.push_back("outside S: " + e);
    for (const auto& e : s.claim_failures) v.offending.push_back("removable: " + e);
    ++cover.instances;
    if (!s.union_is_all()) {
      ++cover.failures;
      r.counterexamples.push_back(name + ": S misses " + std::to_string(s.uncovered.size()) + " edges");
    }
    claim.instances += s.forcing;
    if (!s.claim_holds()) {
      ++claim.failures;
      r.counterexamples.push_back(name + ": a partner of a forcing edge is removable");
    }
    if (v.holds) r.holders.push_back(name);
    r.expected_holders.push_back(name);
    r.verdicts.push_back(std::move(v));
  }
  r.corpus_size = r.verdicts.size();
  r.corpus_hash = fnv1a_hex(labels);
  r.checks = {cover, claim};
  return r;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const GraphVerdict& v : report.verdicts) {
    verdicts.push_back({{"graph", v.display_name()},
                        {"name", v.name.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.name)},
                        {"fingerprint", v.fingerprint},
                        {"label", v.label},
                        {"n", v.vertex_count},
                        {"brick", v.brick},
                        {"holds", v.holds},
                        {"forcing", v.forcing},
                        {"b_invariant", v.b_invariant},
                        {"thin", v.thin},
                        {"offending", v.offending}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckTally& t : report.checks) {
    checks.push_back({{"check", t.name}, {"instances", t.instances}, {"failures", t.failures}});
  }
  return {{"tool", "brickforge"},
          {"version", std::string(kVersion)},
          {"harness", report.harness},
          {"n_max", report.n_max},
          {"corpus", {{"description", report.corpus}, {"size", report.corpus_size}, {"hash", report.corpus_hash}}},
          {"passed", report.passed()},
          {"expected_holders", report.expected_holders},
          {"holders", report.holders},
          {"checks", checks},
          {"verdicts", verdicts},
          {"counterexamples", report.counterexamples}};
}

std::string to_markdown(const VerificationReport& report) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& items) {
    std::string s;
    for (const auto& item : items) s += (s.empty() ? "" : ", ") + item;
    return s.empty() ? std::string("(none)") : s;
  };
  out << "# Verification: " << report.harness << "\n\n";
  out << "- tool: brickforge " << kVersion << "\n";
  if (report.n_max > 0) out << "- n_max: " << report.n_max << "\n";
  out << "- corpus: " << report.corpus << "; " << report.corpus_size << " graphs; hash " << report.corpus_hash << "\n";
  out << "- result: **" << (report.passed() ? "PASS" : "FAIL") << "**\n";
  if (!report.expected_holders.empty() || !report.holders.empty()) {
    out << "- expected holders: " << join(report.expected_holders) << "\n";
    out << "- holders found: " << join(report.holders) << "\n";
  }
  out << "\n## Checks\n\n| check | instances | failures |\n|-------|----------:|---------:|\n";
  for (const CheckTally& t : report.checks) out << "| " << t.name << " | " << t.instances << " | " << t.failures << " |\n";
  if (!report.verdicts.empty()) {
    out << "\n## Graphs\n\n| graph | n | brick | forcing | b-invariant | thin | holds | offending edges |\n"
        << "|-------|--:|:-----:|--------:|------------:|-----:|:-----:|-----------------|\n";
    for (const GraphVerdict& v : report.verdicts) {
      out << "| " << v.display_name() << " | " << v.vertex_count << " | " << (v.brick ? "yes" : "no") << " | "
          << v.forcing << " | " << v.b_invariant << " | " << v.thin << " | " << (v.holds ? "yes" : "no") << " | "
          << (v.offending.empty() ? "" : join(v.offending)) << " |\n";
    }
  }
  out << "\n## Counterexamples\n\n";
  if (report.counterexamples.empty()) out << "none\n";
  for (const std::string& c : report.counterexamples) out << "- " << c << "\n";
  return out.str();
}

}  // namespace brickforge
