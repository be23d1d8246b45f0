#include "maxleaf/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

namespace maxleaf {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto b = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

std::uint64_t to_uint(std::string_view token, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

struct Header {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t line = 0;
};

Graph build(const Header& header, const std::vector<Edge>& edges,
            const std::vector<std::size_t>& lines, std::size_t last_line) {
  if (edges.size() != header.m) {
    throw ParseError(edges.size() < header.m ? last_line : lines[header.m],
                     "header declares " + std::to_string(header.m) + " edges but body has " +
                         std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(header.n, edges);
  } catch (const GraphError& e) {
    const auto line = e.edge_index() == GraphError::kNoIndex ? header.line : lines[e.edge_index()];
    throw ParseError(line, e.what());
  }
}

template <typename LineFn>
std::size_t for_each_line(std::string_view text, LineFn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(text.substr(pos, end - pos), line_no);
    pos = end + 1;
  }
  return line_no;
}

Graph parse_edgelist(std::string_view text) {
  std::optional<Header> header;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  const auto last = for_each_line(text, [&](std::string_view line, std::size_t no) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) return;
    if (tok.size() != 2) {
      throw ParseError(no, "expected two integers, found " + std::to_string(tok.size()) + " fields");
    }
    if (!header) {
      header = Header{to_uint(tok[0], no, "vertex count"), to_uint(tok[1], no, "edge count"), no};
      return;
    }
    const auto u = to_uint(tok[0], no, "vertex id");
    const auto v = to_uint(tok[1], no, "vertex id");
    if (u >= header->n || v >= header->n) {
      throw ParseError(no, "vertex id out of range (n=" + std::to_string(header->n) + ")");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    lines.push_back(no);
  });
  if (!header) throw ParseError(last, "missing 'n m' header");
  return build(*header, edges, lines, last);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<Header> header;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  const auto last = for_each_line(text, [&](std::string_view line, std::size_t no) {
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (header) throw ParseError(no, "second problem line");
      if (tok.size() != 4 || tok[1] != "edge") throw ParseError(no, "expected 'p edge <n> <m>'");
      header = Header{to_uint(tok[2], no, "vertex count"), to_uint(tok[3], no, "edge count"), no};
      return;
    }
    if (tok[0] == "e") {
      if (!header) throw ParseError(no, "edge line before problem line");
      if (tok.size() != 3) throw ParseError(no, "expected 'e <u> <v>'");
      const auto u = to_uint(tok[1], no, "vertex id");
      const auto v = to_uint(tok[2], no, "vertex id");
      if (u == 0 || v == 0 || u > header->n || v > header->n) {
        throw ParseError(no, "vertex id out of range 1.." + std::to_string(header->n));
      }
      edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
      lines.push_back(no);
      return;
    }
    throw ParseError(no, "unknown line type '" + std::string(tok[0]) + "'");
  });
  if (!header) throw ParseError(last, "missing 'p edge' line");
  return build(*header, edges, lines, last);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "edgelist") return Format::edgelist;
  if (name == "dimacs") return Format::dimacs;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text, Format format) {
  return format == Format::dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

std::string serialize_graph(const Graph& g, Format format) {
  std::string out;
  const auto n = std::to_string(g.num_vertices());
  const auto m = std::to_string(g.num_edges());
  const auto shift = format == Format::dimacs ? 1u : 0u;
  out += format == Format::dimacs ? "p edge " + n + " " + m + "\n" : n + " " + m + "\n";
  for (const auto& e : g.edges()) {
    if (format == Format::dimacs) out += "e ";
    out += std::to_string(e.u + shift) + " " + std::to_string(e.v + shift) + "\n";
  }
  return out;
}

std::string to_dot(const Graph& g, const SpanningTree* tree) {
  std::vector<Edge> tree_edges;
  if (tree) tree_edges = tree->edges();
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  }
  for (const auto& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (tree) {
      const bool in_tree = std::binary_search(tree_edges.begin(), tree_edges.end(), e);
      out += in_tree ? " [style=solid]" : " [style=dashed]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace maxleaf
