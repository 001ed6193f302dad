#include "brickforge/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <unordered_set>

#include "brickforge/error.hpp"
#include "brickforge/parallel.hpp"
#include "brickforge/ydelta.hpp"

namespace brickforge {

namespace {

MultiGraph k4() { return MultiGraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

bool catalog_order(const CatalogEntry& a, const CatalogEntry& b) {
  if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
  return a.label < b.label;
}

std::vector<EdgeId> ids_of(const nlohmann::json& j, const char* key) {
  return j.contains(key) ? j.at(key).get<std::vector<EdgeId>>() : std::vector<EdgeId>{};
}

}  // namespace

std::vector<CatalogEntry> generate_k4_based(int n_max, const GenerateOptions& options) {
  std::vector<CatalogEntry> all;
  if (n_max < 4) return all;
  std::unordered_set<CanonicalLabel, CanonicalLabelHash> seen;

  CatalogEntry root;
  root.graph = canonical_form(k4());
  root.label = canonical_label(root.graph);
  root.vertex_count = 4;
  seen.insert(root.label);
  std::vector<CatalogEntry> level{root};

  while (true) {
    const int n = level.front().vertex_count;
    all.insert(all.end(), level.begin(), level.end());
    if (n + 2 > n_max) break;
    std::vector<CatalogEntry> next;
    for (const CatalogEntry& parent : level) {
      for (VertexId v = 0; v < n; ++v) {
        const MultiGraph child = y_to_delta(parent.graph, v).graph;
        CanonicalLabel label = canonical_label(child);
        if (!seen.insert(label).second) continue;
        CatalogEntry e;
        e.label = std::move(label);
        e.vertex_count = n + 2;
        e.graph = canonical_form(child);
        e.parent = parent.label;
        e.expanded_vertex = v;
        next.push_back(std::move(e));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), catalog_order);
    level = std::move(next);
  }

  if (options.classify) {
    parallel_for(all.size(), [&](std::size_t i) {
      all[i].classification = classify(all[i].graph);
      if (all[i].classification.brick) all[i].edges = edge_report(all[i].graph);
    });
  }
  return all;
}

nlohmann::json to_json(const CatalogEntry& entry) {
  nlohmann::json j{{"label", entry.label.hex()},
                   {"n", entry.vertex_count},
                   {"edges", entry.graph.edge_pairs()},
                   {"parent", entry.parent ? nlohmann::json(entry.parent->hex()) : nlohmann::json(nullptr)},
                   {"expanded_vertex",
                    entry.expanded_vertex ? nlohmann::json(*entry.expanded_vertex) : nlohmann::json(nullptr)},
                   {"class", entry.classification}};
  std::vector<std::int64_t> pm_counts;
  for (const EdgeFlags& f : entry.edges.edges) pm_counts.push_back(f.pm_count);
  j["edge_report"] = {{"pm_counts", pm_counts},
                      {"forcing", entry.edges.forcing()},
                      {"removable", entry.edges.removable()},
                      {"b_invariant", entry.edges.b_invariant()},
                      {"thin", entry.edges.thin()}};
  return j;
}

CatalogEntry catalog_entry_from_json(const nlohmann::json& j) {
  try {
    CatalogEntry e;
    e.vertex_count = j.at("n").get<int>();
    e.graph = MultiGraph::build(e.vertex_count, j.at("edges").get<std::vector<std::pair<VertexId, VertexId>>>());
    e.label = canonical_label(e.graph);
    if (e.label.hex() != j.at("label").get<std::string>()) {
      throw GraphError(ErrorKind::ParseError, "catalog label does not match its graph");
    }
    if (!j.at("parent").is_null()) e.parent = CanonicalLabel::from_hex(j.at("parent").get<std::string>());
    if (!j.at("expanded_vertex").is_null()) e.expanded_vertex = j.at("expanded_vertex").get<VertexId>();
    const auto& c = j.at("class");
    e.classification = GraphClass{c.at("connected"), c.at("vertex_connectivity"), c.at("bipartite"),
                                  c.at("matching_covered"), c.at("bicritical"), c.at("brick"),
                                  c.at("brace"), c.at("cubic")};
    const auto& r = j.at("edge_report");
    const auto pm_counts = r.at("pm_counts").get<std::vector<std::int64_t>>();
    e.edges.edges.resize(pm_counts.size());
    for (std::size_t i = 0; i < pm_counts.size(); ++i) {
      e.edges.edges[i].pm_count = pm_counts[i];
      e.edges.edges[i].in_some_pm = pm_counts[i] > 0;
    }
    auto flag = [&](const char* key, bool EdgeFlags::*member) {
      for (EdgeId id : ids_of(r, key)) e.edges.edges.at(static_cast<std::size_t>(id)).*member = true;
    };
    flag("forcing", &EdgeFlags::forcing);
    flag("removable", &EdgeFlags::removable);
    flag("b_invariant", &EdgeFlags::b_invariant);
    flag("thin", &EdgeFlags::thin);
    return e;
  } catch (const nlohmann::json::exception& err) {
    throw GraphError(ErrorKind::ParseError, std::string("catalog entry: ") + err.what());
  }
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  for (const CatalogEntry& e : entries) out << to_json(e).dump() << "\n";
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& err) {
      throw GraphError(ErrorKind::ParseError, std::string("catalog line: ") + err.what());
    }
    out.push_back(catalog_entry_from_json(j));
  }
  return out;
}

void update_catalog_file(const std::string& path, const std::vector<CatalogEntry>& fresh) {
  std::map<std::pair<int, CanonicalLabel>, CatalogEntry> merged;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    for (auto& e : read_catalog(in)) merged.insert_or_assign({e.vertex_count, e.label}, std::move(e));
  }
  for (const auto& e : fresh) merged.insert_or_assign({e.vertex_count, e.label}, e);
  std::vector<CatalogEntry> entries;
  for (auto& [key, e] : merged) entries.push_back(std::move(e));
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw GraphError(ErrorKind::ParseError, "cannot write " + path);
  write_catalog(out, entries);
}

}  // namespace brickforge
