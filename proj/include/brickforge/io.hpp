#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "brickforge/graph.hpp"

namespace brickforge {

/// {"n": <int>, "edges": [[u,v],...], "names": {"<id>": "<name>", ...}}
/// ("names" optional). Throws ParseError, LoopRejected, VertexOutOfRange.
MultiGraph graph_from_json(const nlohmann::json& j);
MultiGraph parse_graph_json(std::string_view text);
nlohmann::json graph_to_json(const MultiGraph& g);

/// Standard graph6 (optional ">>graph6<<" header). Edges come out sorted by
/// (u, v) with u < v.
MultiGraph parse_graph6(std::string_view text);
/// Throws MultigraphNotRepresentable for graphs with parallel edges.
std::string to_graph6(const MultiGraph& g);

}  // namespace brickforge
