#pragma once

#include <optional>
#include <string>

#include "epacker/graph.hpp"

namespace epk {

enum class GraphFormat { edge_list, graph6 };

// Edge list: one "u v" pair per line, '#' starts a comment, an optional
// header line "n <count>" declares the vertex count (required for graphs
// with isolated vertices). Without a header the vertex set is the set of
// mentioned ids; arbitrary nonnegative ids are densified and kept as labels.
Graph parse_edge_list(const std::string& text);

// Header "n <count>" plus one line per edge, in internal ids.
std::string serialize_edge_list(const Graph& g);

// graph6 per the published format specification, strict: exact length,
// bytes in [63, 126], zero padding bits. Accepts an optional ">>graph6<<"
// prefix and a trailing newline.
Graph parse_graph6(const std::string& text);

std::string serialize_graph6(const Graph& g);

Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// Picks the format from a file name: ".g6" means graph6, ".edges" edge list.
std::optional<GraphFormat> format_from_extension(const std::string& path);

// DOT export; vertices show their labels, `highlight` vertices are filled.
std::string to_dot(const Graph& g, const VertexSet& highlight = {},
                   const std::string& name = "G");

} // namespace epk
