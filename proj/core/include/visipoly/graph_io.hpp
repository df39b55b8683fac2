#ifndef VISIPOLY_GRAPH_IO_HPP
#define VISIPOLY_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "visipoly/graph.hpp"

namespace visipoly {

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// line terminators are ignored. Orders up to 258047 are supported.
///
/// Throws format_error carrying the byte offset of the first bad byte, or of
/// the end of input when the adjacency section is truncated.
Graph parse_graph6(std::string_view line);

/// graph6 encoding without header or newline.
std::string encode_graph6(const Graph &g);

/// Edge-list text: first non-comment line "n m", then m lines "u v" with
/// 0-based endpoints. Blank lines and '#' comments are ignored. Throws
/// format_error carrying the 1-based line number.
Graph parse_edge_list(std::istream &in);
Graph parse_edge_list(std::string_view text);

/// Edge-list rendering accepted by parse_edge_list.
std::string to_edge_list(const Graph &g);

}  // namespace visipoly

#endif
