// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--known-failures 6,...]
//
// Without flags the exit status is 0 iff every criterion passes. With
// --known-failures it is 0 iff exactly the listed criteria fail, so a
// documented failure stays visible without breaking the test run, and a
// fixed one is noticed.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "brickforge/atlas.hpp"
#include "brickforge/canon.hpp"
#include "brickforge/catalog.hpp"
#include "brickforge/edgeclass.hpp"
#include "brickforge/matchings.hpp"
#include "brickforge/structure.hpp"
#include "brickforge/tightcut.hpp"
#include "brickforge/verify.hpp"
#include "oracles.hpp"

using namespace brickforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& item : items) s += (s.empty() ? "" : ", ") + item;
  return s;
}

std::string sorted_join(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  return join(items);
}

bool all_b_invariant_forcing(const EdgeClassification& r) {
  for (EdgeId e : r.b_invariant()) {
    if (!r.edges[static_cast<std::size_t>(e)].forcing) return false;
  }
  return true;
}

std::string first_counterexample(const VerificationReport& r) {
  return r.counterexamples.empty() ? "" : r.counterexamples.front();
}

Outcome main_theorem() {
  const VerificationReport at14 = verify_main_theorem(14);
  const VerificationReport at16 = verify_main_theorem(16);
  const std::set<std::string> full(theorem_graphs().begin(), theorem_graphs().end());
  const std::set<std::string> found16(at16.holders.begin(), at16.holders.end());
  std::ostringstream d;
  d << "n_max=14: " << (at14.passed() ? "pass" : "fail") << ", " << at14.holders.size() << " holders {"
    << sorted_join(at14.holders) << "}, corpus " << at14.corpus_size << "; n_max=16: "
    << (at16.passed() ? "pass" : "fail") << ", " << at16.holders.size()
    << " holders (all ten listed graphs; G8 has 16 vertices)";
  if (!at14.passed()) d << "; " << first_counterexample(at14);
  return {at14.passed() && at16.passed() && found16 == full, d.str()};
}

Outcome fixed_counts() {
  auto forcing = [](const char* name) { return forcing_edges(named_graph(name).graph).size(); };
  auto b_inv = [](const char* name) { return edge_report(named_graph(name).graph); };
  const auto bicorn = b_inv("bicorn");
  const bool bicorn_ok = bicorn.b_invariant().size() == 1 &&
                         bicorn.edges[static_cast<std::size_t>(bicorn.b_invariant()[0])].forcing;
  const std::size_t k4 = forcing("K4"), r0 = forcing("R0"), g5 = forcing("G5");
  const std::size_t bk4 = b_inv("K4").b_invariant().size(), bc6 = b_inv("C6bar").b_invariant().size(),
                    bp = b_inv("Petersen").b_invariant().size();
  std::ostringstream d;
  d << "forcing K4=" << k4 << " R0=" << r0 << " G5=" << g5 << "; b-invariant K4=" << bk4 << " C6bar=" << bc6
    << " Petersen=" << bp << "; bicorn b-invariant=" << bicorn.b_invariant().size()
    << (bicorn_ok ? " (forcing)" : "");
  return {k4 == 6 && r0 == 0 && g5 == 3 && bk4 == 0 && bc6 == 0 && bp == 0 && bicorn_ok, d.str()};
}

Outcome catalog_shape() {
  const auto entries = generate_k4_based(10, {.classify = false});
  std::map<int, std::vector<const CatalogEntry*>> by_size;
  for (const auto& e : entries) by_size[e.vertex_count].push_back(&e);
  const auto oracle_levels = oracle::k4_based_classes(10);
  bool ok = oracle_levels.size() == 4;
  std::ostringstream d;
  d << "classes at n=4,6,8,10:";
  for (int n = 4; n <= 10; n += 2) {
    const auto& level = oracle_levels[static_cast<std::size_t>((n - 4) / 2)];
    d << " " << by_size[n].size() << "/" << level.size();
    ok = ok && by_size[n].size() == level.size();
    for (const auto& m : level) {
      int hits = 0;
      for (const auto* e : by_size[n]) hits += oracle::isomorphic(oracle::adjacency(e->graph), m) ? 1 : 0;
      ok = ok && hits == 1;
    }
  }
  std::vector<std::string> names;
  for (int n = 4; n <= 10; n += 2) {
    for (const auto* e : by_size[n]) names.push_back(identify(e->graph).value_or("?"));
  }
  d << " (catalog/oracle); " << join(names);
  ok = ok && by_size[4].size() == 1 && by_size[6].size() == 1 && by_size[8].size() == 1 && by_size[10].size() == 3;
  std::set<std::string> ten;
  for (const auto* e : by_size[10]) ten.insert(identify(e->graph).value_or("?"));
  ok = ok && ten == std::set<std::string>{"R1", "G3", "G4"};
  return {ok, d.str()};
}

Outcome lemma_suite() {
  const VerificationReport r = verify_lemma_suite(12);
  std::int64_t instances = 0;
  for (const auto& t : r.checks) instances += t.instances;
  std::ostringstream d;
  d << r.checks.size() << " properties, " << instances << " instances, " << r.counterexamples.size()
    << " counterexamples";
  if (!r.passed()) d << "; " << first_counterexample(r);
  return {r.passed(), d.str()};
}

Outcome corollary() {
  // (a) extremal <=> every b-invariant edge forcing, catalog bricks <= 14 plus Petersen.
  std::vector<MultiGraph> bricks;
  for (const auto& e : generate_k4_based(14)) bricks.push_back(e.graph);
  bricks.push_back(named_graph("Petersen").graph);
  int agree = 0, disagree = 0;
  for (const MultiGraph& g : bricks) {
    (is_extremal(g) == all_b_invariant_forcing(edge_report(g)) ? agree : disagree) += 1;
  }
  // (b) the extremal members of catalog (<= 16, to reach G8) + Petersen + theta + K33.
  std::vector<MultiGraph> pool;
  for (const auto& e : generate_k4_based(16, {.classify = false})) pool.push_back(e.graph);
  for (const char* name : {"Petersen", "theta", "K33"}) pool.push_back(named_graph(name).graph);
  std::vector<std::string> extremal;
  for (const MultiGraph& g : pool) {
    if (is_extremal(g)) extremal.push_back(identify(g).value_or("#" + fnv1a_hex(canonical_label(g).bytes)));
  }
  std::set<std::string> expected(theorem_graphs().begin(), theorem_graphs().end());
  expected.insert("theta");
  const MultiGraph& k33 = named_graph("K33").graph;
  const auto k33_pms = count_perfect_matchings(k33);
  const int k33_rank = matching_lattice_rank(k33);
  const int k33_oracle = oracle::matching_rank(k33);
  std::ostringstream d;
  d << "equivalence holds on " << agree << "/" << (agree + disagree) << " bricks; extremal set {" << sorted_join(extremal)
    << "}; K33 " << k33_pms << " PMs vs rank " << k33_rank << " (oracle " << k33_oracle << ")";
  const bool ok = disagree == 0 && std::set<std::string>(extremal.begin(), extremal.end()) == expected &&
                  extremal.size() == expected.size() && k33_pms == 6 && k33_rank == 5 && k33_oracle == 5;
  return {ok, d.str()};
}

Outcome thin_note() {
  const VerificationReport r = verify_thin_note(14);
  bool holders_ok = false;
  for (const auto& t : r.checks) {
    if (t.name == "holders_match_theorem_list") holders_ok = t.failures == 0;
  }
  std::ostringstream d;
  d << "holders " << (holders_ok ? "match" : "differ") << "; " << r.counterexamples.size() << " counterexample(s)";
  for (const auto& c : r.counterexamples) d << "; " << c;
  return {r.passed(), d.str()};
}

Outcome sufficiency() {
  const VerificationReport r = verify_sufficiency();
  bool unions = true;
  std::ostringstream d;
  for (const char* name : {"G2", "G3", "G4", "G5", "G6", "G7", "G8"}) {
    const SufficiencyResult s = sufficiency_check(name);
    unions = unions && verify_sufficiency_union(name);
    d << name << ":" << s.forcing << (s.union_is_all() && s.claim_holds() ? "" : "!") << " ";
  }
  d << "(forcing edges per graph; S = E and the removability claim hold)";
  return {unions && r.passed(), d.str()};
}

Outcome decomposition_order() {
  const std::vector<TieBreak> orders{
      {},
      {TieBreak::VertexOrder::Reverse, false, 0},
      {TieBreak::VertexOrder::Shuffled, false, 1},
      {TieBreak::VertexOrder::Shuffled, true, 2},
      {TieBreak::VertexOrder::Identity, true, 0},
  };
  std::vector<MultiGraph> corpus;
  std::vector<MultiGraph> seeds;
  for (const auto& e : generate_k4_based(12, {.classify = false})) seeds.push_back(e.graph);
  seeds.push_back(named_graph("Petersen").graph);
  for (const MultiGraph& g : seeds) {
    corpus.push_back(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      MultiGraph h = delete_edge(g, e).graph;
      if (is_matching_covered(h)) corpus.push_back(std::move(h));
    }
  }
  int mismatches = 0, split = 0;
  for (const MultiGraph& g : corpus) {
    std::vector<CanonicalLabel> reference;
    int reference_bricks = -1;
    for (const TieBreak& tie : orders) {
      const DecompositionTree t = tight_cut_decomposition(g, tie);
      std::vector<CanonicalLabel> leaves;
      for (const auto* leaf : t.leaves()) leaves.push_back(canonical_label(collapse_parallel_edges(leaf->graph)));
      std::sort(leaves.begin(), leaves.end());
      if (reference_bricks < 0) {
        reference = leaves;
        reference_bricks = t.brick_count();
        split += t.root.is_leaf() ? 0 : 1;
      } else if (leaves != reference || t.brick_count() != reference_bricks) {
        ++mismatches;
      }
    }
  }
  std::ostringstream d;
  d << corpus.size() << " matching covered graphs (" << split << " with tight cuts) x " << orders.size()
    << " orders, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--known-failures" && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      for (std::string item; std::getline(list, item, ',');) known.insert(std::stoi(item));
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"main theorem reproduction", main_theorem},
      {"fixed counts", fixed_counts},
      {"catalog shape", catalog_shape},
      {"lemma suite at n_max=12", lemma_suite},
      {"extremality corollary", corollary},
      {"thin-edge note at n_max=14", thin_note},
      {"sufficiency S_i = E(G_i)", sufficiency},
      {"decomposition-order independence", decomposition_order},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << " — " << o.detail << " ["
              << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
  }
  if (known.empty()) return failed.empty() ? 0 : 1;
  return failed == known ? 0 : 1;
}
