#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "relpoly/graph.hpp"

namespace relpoly {

/// Parses "u v" lines (0-indexed). Blank lines and lines starting with '#'
/// are skipped; duplicates collapse. Node count is max id + 1, or larger when
/// a "# nodes N" comment asks for trailing isolated nodes.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_string(std::string_view text);
Graph load_edge_list_file(const std::filesystem::path& path);

/// Writes sorted "u v" lines with u < v. A leading "# nodes N" comment is
/// emitted only when trailing isolated nodes would otherwise be lost.
void save_edge_list(const Graph& g, std::ostream& out);
std::string save_edge_list_string(const Graph& g);

}  // namespace relpoly
