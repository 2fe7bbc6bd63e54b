#include "kfactor/graph_io.hpp"

#include "kfactor/error.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace kfactor {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      out.push_back(line.substr(start, i - start));
  }
  return out;
}

int parse_index(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

} // namespace

LabeledGraph parse_graph(std::string_view text) {
  std::optional<int> order;
  std::vector<EdgeSpec> edges;
  std::map<std::string, VertexSet> labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#')
      continue;

    const std::string_view kind = tokens[0];
    if (kind == "p") {
      if (order)
        throw ParseError(line_no, "duplicate header line");
      if (tokens.size() != 3 || tokens[1] != "mgraph")
        throw ParseError(line_no, "header must be 'p mgraph <n>'");
      order = parse_index(tokens[2], line_no);
      continue;
    }
    if (!order)
      throw ParseError(line_no, "missing 'p mgraph <n>' header before data");

    if (kind == "e") {
      if (tokens.size() != 3)
        throw ParseError(line_no, "edge line must be 'e <u> <v>'");
      const int u = parse_index(tokens[1], line_no);
      const int v = parse_index(tokens[2], line_no);
      if (u >= *order || v >= *order)
        throw ParseError(line_no, "edge endpoint out of range for n = " + std::to_string(*order));
      edges.push_back({u, v, 1});
    } else if (kind == "l") {
      if (tokens.size() < 2)
        throw ParseError(line_no, "label line must be 'l <name> <v>...'");
      std::string name(tokens[1]);
      if (labels.contains(name))
        throw ParseError(line_no, "duplicate label '" + name + "'");
      std::vector<Vertex> members;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const int v = parse_index(tokens[i], line_no);
        if (v >= *order)
          throw ParseError(line_no, "label member out of range for n = " + std::to_string(*order));
        members.push_back(v);
      }
      labels.emplace(std::move(name), VertexSet(std::move(members)));
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
    }
  }
  if (!order)
    throw ParseError(line_no, "missing 'p mgraph <n>' header");

  return {Multigraph::from_edge_list(*order, edges), std::move(labels)};
}

LabeledGraph read_graph(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

LabeledGraph read_graph_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open " + path.string());
  return read_graph(in);
}

std::string format_graph(const LabeledGraph &g) {
  std::string out = "p mgraph " + std::to_string(g.graph.order()) + "\n";
  for (const Edge &e : g.graph.edges()) {
    const std::string line = "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    for (int i = 0; i < e.multiplicity; ++i)
      out += line;
  }
  for (const auto &[name, set] : g.labels) {
    out += "l " + name;
    for (Vertex v : set)
      out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string format_graph(const Multigraph &g) { return format_graph(LabeledGraph{g, {}}); }

void write_graph_file(const std::filesystem::path &path, const LabeledGraph &g) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write " + path.string());
  out << format_graph(g);
}

} // namespace kfactor
