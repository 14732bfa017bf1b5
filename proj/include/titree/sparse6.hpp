#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "titree/tree.hpp"

namespace titree {

/// One sparse6 line without the trailing newline, e.g. ":Fa@x^". The
/// encoding matches nauty's writer bit for bit, including its padding rule.
std::string encode_sparse6(const Tree& t);

/// Accepts an optional ">>sparse6<<" header and a trailing newline. Throws
/// MalformedSparse6 on a bad prefix, truncated data, a vertex index >= n, or
/// a decoded graph that is not a tree.
Tree decode_sparse6(std::string_view line);

/// Edge list decoded from a sparse6 line, without the tree check.
std::vector<Edge> decode_sparse6_edges(std::string_view line, Vertex* order = nullptr);

/// graph6 input convenience (optional ">>graph6<<" header). Throws
/// MalformedSparse6 on malformed data, as both formats share one error.
Tree decode_graph6(std::string_view line);

/// Dispatches on the leading ':' to the sparse6 or graph6 decoder.
Tree decode_graph_line(std::string_view line);

}  // namespace titree
