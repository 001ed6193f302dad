#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "brickforge/catalog.hpp"

namespace brickforge {

struct GraphVerdict {
  std::string name;         // atlas name, empty for unnamed classes
  std::string fingerprint;  // short hash of the canonical label
  std::string label;        // canonical label, hex
  int vertex_count = 0;
  bool brick = false;
  bool holds = false;
  int forcing = 0;
  int b_invariant = 0;
  int thin = 0;
  std::vector<std::string> offending;  // edges that break the property

  /// Atlas name when known, otherwise "#<fingerprint>".
  std::string display_name() const;
};

struct CheckTally {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
};

struct VerificationReport {
  std::string harness;
  int n_max = 0;
  std::string corpus;       // human-readable description
  std::size_t corpus_size = 0;
  std::string corpus_hash;  // FNV-1a over the sorted canonical labels
  std::vector<GraphVerdict> verdicts;
  std::vector<std::string> holders;
  std::vector<std::string> expected_holders;
  std::vector<CheckTally> checks;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

nlohmann::json to_json(const VerificationReport& report);
std::string to_markdown(const VerificationReport& report);

/// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(std::string_view bytes);

/// Every b-invariant edge of every brick in generate_k4_based(n_max) plus
/// Petersen is checked for being forcing. Passes iff the graphs where this
/// holds are exactly the theorem list restricted to the corpus.
VerificationReport verify_main_theorem(int n_max);
/// Same, with the corpus read from a catalog (entries above n_max are
/// ignored; edge data is recomputed).
VerificationReport verify_main_theorem(const std::vector<CatalogEntry>& catalog, int n_max);

/// As verify_main_theorem with thin edges in place of b-invariant ones, plus
/// the fixture checks on R1..R6 (every b-invariant edge is thin).
VerificationReport verify_thin_note(int n_max);
VerificationReport verify_thin_note(const std::vector<CatalogEntry>& catalog, int n_max);

/// The module-level properties over the catalog and fixtures, one tally per
/// property. Throws PreconditionViolated when n_max < 8.
VerificationReport verify_lemma_suite(int n_max);
VerificationReport verify_lemma_suite(const std::vector<CatalogEntry>& catalog, int n_max);

struct SufficiencyResult {
  std::string name;
  int forcing = 0;
  std::vector<std::string> uncovered;       // edges outside S
  std::vector<std::string> claim_failures;  // removable e' in the PM of a forcing edge
  bool union_is_all() const { return uncovered.empty(); }
  bool claim_holds() const { return claim_failures.empty(); }
};

/// S = union of the perfect matchings that contain a forcing edge. Throws
/// UnknownName.
SufficiencyResult sufficiency_check(std::string_view name);
/// S = E(G) and the removability claim holds.
bool verify_sufficiency_union(std::string_view name);
/// sufficiency_check over G2..G8 as a report.
VerificationReport verify_sufficiency();

}  // namespace brickforge
