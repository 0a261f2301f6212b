#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "girthlab/multigraph.hpp"

namespace girthlab {

inline constexpr std::size_t kIsomorphismVertexCap = 512;

/// Vertex bijection `g -> h` respecting loops and edge multiplicities, or
/// nothing when the graphs are not isomorphic.
///
/// Colour refinement on (colour, multiset of neighbour colours with
/// multiplicity), run jointly on both graphs, followed by individualisation
/// and backtracking. Meant for desk-scale witnesses only: throws
/// SizeCapExceeded when either graph has more than `vertex_cap` vertices.
std::optional<std::vector<VertexId>> find_isomorphism(const MultiGraph& g, const MultiGraph& h,
                                                      std::size_t vertex_cap = kIsomorphismVertexCap);

inline bool are_isomorphic(const MultiGraph& g, const MultiGraph& h, std::size_t vertex_cap = kIsomorphismVertexCap) {
    return find_isomorphism(g, h, vertex_cap).has_value();
}

/// True iff `map` is a bijection V(g) -> V(h) carrying the edge multiset of
/// `g` onto that of `h`.
bool is_isomorphism(const MultiGraph& g, const MultiGraph& h, std::span<const VertexId> map);

}  // namespace girthlab
