#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

enum class Format { edge_list, dimacs };

std::string_view to_string(Format f);
Format parse_format(std::string_view name);

struct GraphDocument {
  Graph graph;
  std::vector<std::string> labels;  // empty, or one name per vertex
  std::string source;               // file path or generator recipe
};

/// edge_list: "u v" lines, '#' starts a comment. Without a header vertices
/// are numbered by first appearance and a lone token declares a vertex; an
/// "n <count>" header before the first edge fixes the vertices to 0..count-1.
/// dimacs: 'c' comments, "p edge n m", then 1-based "e u v" lines.
/// Malformed lines raise ParseError; self-loops and repeated edges raise
/// InvalidInput.
GraphDocument parse_graph(std::string_view text, Format format, std::string source = {});

std::string emit_graph(const Graph& g, Format format);

/// Reads a file; without an explicit format, ".col" and ".dimacs" mean
/// dimacs and anything else edge_list.
GraphDocument read_graph_file(const std::filesystem::path& path, std::optional<Format> format = std::nullopt);

}  // namespace berge
