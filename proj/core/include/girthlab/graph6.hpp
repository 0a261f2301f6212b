#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "girthlab/multigraph.hpp"

namespace girthlab {

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

/// Parses one graph6 or sparse6 line (sparse6 lines start with ':'). An
/// optional `>>graph6<<` / `>>sparse6<<` header and trailing line breaks
/// are accepted. Incremental sparse6 (';') and digraph6 ('&') are rejected.
///
/// Throws MalformedEncoding or VertexCountOverflow (when n > `vertex_cap`).
MultiGraph parse_graph6(std::string_view line, std::size_t vertex_cap = kDefaultVertexCap);

/// Canonical graph6 line (no header, no newline) under the current vertex
/// order. Throws NotSimple for loops or parallel edges.
std::string write_graph6(const MultiGraph& g);

}  // namespace girthlab
