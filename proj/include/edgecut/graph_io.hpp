#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "edgecut/graph.hpp"

namespace edgecut {

/// A parsed graph together with the input line it came from.
struct GraphDocument {
  Graph graph;
  std::optional<std::size_t> source_line;
};

/// Edge-list text: first non-comment line "n m", then m lines "u v".
/// Lines starting with '#' and blank lines are ignored. Errors are
/// ParseError with the offending line number.
Graph parse_edgelist(std::string_view text);
std::string write_edgelist(const Graph& g);

/// Short-form graph6 is limited to n <= 62.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one short-form graph6 line (a trailing newline is tolerated).
/// `line_number` is only used in error messages.
Graph parse_graph6(std::string_view line, std::size_t line_number = 1);
std::string write_graph6(const Graph& g);

}  // namespace edgecut
