#ifndef HAMCYCLE_GRAPH_IO_HPP
#define HAMCYCLE_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "hamcycle/graph.hpp"

namespace hamcycle {

/// Parses "u v" lines. Blank lines and '#' comments are skipped. Vertex ids
/// are non-negative integers; they become labels and are renumbered to
/// 0..n-1 in ascending label order. Throws ParseError carrying the line
/// number for malformed tokens, self-loops and duplicate edges.
[[nodiscard]] Graph parse_edge_list(std::string_view text);

/// One "u v" line per edge, using labels.
[[nodiscard]] std::string format_edge_list(const Graph& g);

/// Largest order representable by the single-byte graph6 size field.
inline constexpr std::size_t kGraph6MaxVertices = 62;

/// Decodes a header-free graph6 record (trailing whitespace ignored).
/// Vertices are 0..n-1 with identity labels.
[[nodiscard]] Graph parse_graph6(std::string_view line);

/// Encodes over internal ids; throws TooLarge above kGraph6MaxVertices.
[[nodiscard]] std::string encode_graph6(const Graph& g);

} // namespace hamcycle

#endif // HAMCYCLE_GRAPH_IO_HPP
