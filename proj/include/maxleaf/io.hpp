#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "maxleaf/graph.hpp"
#include "maxleaf/tree.hpp"

namespace maxleaf {

enum class Format { edgelist, dimacs };

Format parse_format(std::string_view name);

/// Parse failure; line() is 1-based and refers to the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// edgelist: "n m" header, then m lines "u v" with 0-based ids; '#' starts a
/// comment. dimacs: "c" comment lines, one "p edge n m" line, m lines "e u v"
/// with 1-based ids. Throws ParseError.
Graph parse_graph(std::string_view text, Format format);

/// Writes the header and the edges sorted with u < v, one per line.
std::string serialize_graph(const Graph& g, Format format);

/// Graphviz rendering. With a tree, tree edges are solid and the remaining
/// edges dashed.
std::string to_dot(const Graph& g, const SpanningTree* tree = nullptr);

}  // namespace maxleaf
