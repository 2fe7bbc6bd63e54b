#pragma once

#include "kfactor/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kfactor {

// Text format, one graph per file, LF newlines:
//
//   p mgraph <n>
//   e <u> <v>            one line per edge unit; "e v v" is a loop
//   l <name> <v1> ...    named vertex part
//   # comment
//
// Blank lines are ignored. Writing emits edges in lexicographic order and
// labels sorted by name, so output is byte-deterministic.

LabeledGraph parse_graph(std::string_view text);
LabeledGraph read_graph(std::istream &in);
LabeledGraph read_graph_file(const std::filesystem::path &path);

std::string format_graph(const LabeledGraph &g);
std::string format_graph(const Multigraph &g);
void write_graph_file(const std::filesystem::path &path, const LabeledGraph &g);

} // namespace kfactor
