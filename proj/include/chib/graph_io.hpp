#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "chib/graph.hpp"

namespace chib::io {

enum class GraphFormat { automatic, graph6, dimacs };

// graph6, as defined in the nauty formats document. An optional ">>graph6<<" header
// and one trailing newline are accepted; nonzero padding bits are rejected.
Graph parse_graph6(std::string_view text);
// Canonical encoding: shortest size prefix, no header, no newline.
std::string to_graph6(const Graph& g);

// DIMACS edge format: "c" comments, one "p edge|col N M" line, then M "e u v" lines (1-based).
// Loops, repeated edges and an edge count that disagrees with M are rejected.
Graph parse_dimacs(std::string_view text);
std::string to_dimacs(const Graph& g);

GraphFormat format_from_path(const std::filesystem::path& path);
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::automatic);
void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace chib::io
