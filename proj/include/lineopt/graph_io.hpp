#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lineopt/graph.hpp"

namespace lineopt {

/// graph6 encoding (nauty's 6-bit format). Throws Error{ParseError} on
/// malformed input; an optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Plain edge list: a "n <count>" header, then one "u v" pair per line.
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// One graph6 string per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// Accepts graph6, the edge-list format, or a JSON object carrying a
/// "graph6" field, telling them apart by their first token.
Graph parse_any(std::string_view text);

nlohmann::json to_json(const Graph& g);

}  // namespace lineopt
