#include "brickforge/io.hpp"

#include <algorithm>

#include "brickforge/error.hpp"

namespace brickforge {

MultiGraph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw GraphError(ErrorKind::ParseError, "graph must be a JSON object");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError(ErrorKind::ParseError, "edge must be a [u, v] pair");
      pairs.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    std::vector<std::string> names;
    if (j.contains("names") && !j.at("names").is_null()) {
      if (n < 0 || n > kMaxVertices) throw GraphError(ErrorKind::TooLarge, "vertex count out of range");
      names.resize(static_cast<std::size_t>(n));
      for (VertexId v = 0; v < n; ++v) names[static_cast<std::size_t>(v)] = std::to_string(v);
      for (const auto& [key, value] : j.at("names").items()) {
        const int v = std::stoi(key);
        if (v < 0 || v >= n) throw GraphError(ErrorKind::VertexOutOfRange, "name for vertex " + key);
        names[static_cast<std::size_t>(v)] = value.get<std::string>();
      }
    }
    return MultiGraph::build(n, pairs, std::move(names));
  } catch (const nlohmann::json::exception& err) {
    throw GraphError(ErrorKind::ParseError, err.what());
  } catch (const std::invalid_argument& err) {
    throw GraphError(ErrorKind::ParseError, std::string("bad vertex key in names: ") + err.what());
  }
}

MultiGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw GraphError(ErrorKind::ParseError, err.what());
  }
  return graph_from_json(j);
}

nlohmann::json graph_to_json(const MultiGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::json j{{"n", g.vertex_count()}, {"edges", edges}};
  if (g.has_names()) {
    nlohmann::json names = nlohmann::json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) names[std::to_string(v)] = g.vertex_name(v);
    j["names"] = names;
  }
  return j;
}

MultiGraph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw GraphError(ErrorKind::ParseError, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw GraphError(ErrorKind::ParseError, "graph6 byte out of range");
  }
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw GraphError(ErrorKind::ParseError, "graph6 string truncated");
    return text[pos++] - 63;
  };
  long n = next();
  if (n == 63) {
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    if (n > 258047) throw GraphError(ErrorKind::ParseError, "8-byte graph6 sizes are not supported");
  }
  if (n > kMaxVertices) throw GraphError(ErrorKind::TooLarge, "graph6 graph has " + std::to_string(n) + " vertices");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  int bits_left = 0;
  int word = 0;
  for (VertexId v = 1; v < n; ++v) {
    for (VertexId u = 0; u < v; ++u) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1) pairs.emplace_back(u, v);
    }
  }
  if (pos != text.size()) throw GraphError(ErrorKind::ParseError, "trailing bytes in graph6 string");
  std::sort(pairs.begin(), pairs.end());
  return MultiGraph::build(static_cast<int>(n), pairs);
}

std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple()) {
    throw GraphError(ErrorKind::MultigraphNotRepresentable, "graph6 cannot encode parallel edges");
  }
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0;
  int filled = 0;
  for (VertexId v = 1; v < n; ++v) {
    for (VertexId u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

}  // namespace brickforge
