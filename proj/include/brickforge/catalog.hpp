#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "brickforge/canon.hpp"
#include "brickforge/edgeclass.hpp"
#include "brickforge/graph.hpp"
#include "brickforge/structure.hpp"

namespace brickforge {

/// One isomorphism class of K4-based cubic graphs. The representative is the
/// canonical form, so it does not depend on the order of discovery.
struct CatalogEntry {
  CanonicalLabel label;
  int vertex_count = 0;
  MultiGraph graph;
  std::optional<CanonicalLabel> parent;
  std::optional<VertexId> expanded_vertex;  // vertex of the parent representative
  GraphClass classification;
  EdgeClassification edges;
};

struct GenerateOptions {
  /// Run classify() and edge_report() on every entry.
  bool classify = true;
};

/// Every class reachable from K4 by Y->delta steps with at most n_max
/// vertices, ordered by vertex count and then canonical label.
std::vector<CatalogEntry> generate_k4_based(int n_max, const GenerateOptions& options = {});

nlohmann::json to_json(const CatalogEntry& entry);
CatalogEntry catalog_entry_from_json(const nlohmann::json& j);

/// JSON lines, one entry per line, keyed by canonical label.
void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> read_catalog(std::istream& in);

/// Merges `fresh` into the entries already in `path` (if any) by label and
/// rewrites the file in canonical order. Rerunning with the same input leaves
/// the file byte-identical.
void update_catalog_file(const std::string& path, const std::vector<CatalogEntry>& fresh);

}  // namespace brickforge
