#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "girthlab/multigraph.hpp"
#include "girthlab/scheme.hpp"

namespace girthlab {

struct TruncationResult {
    MultiGraph graph;
    std::vector<ArcId> vertex_origin;  // new vertex -> arc of the base
};

/// Tr(base, scheme): one vertex per arc, arcs adjacent when consecutive in a
/// rotation or mutually inverse. Vertex ids follow (tail, edge id, end).
/// Throws InvalidScheme when a loop's two arcs are consecutive in a rotation
/// (the result would not be simple).
TruncationResult truncate(const DihedralScheme& scheme);

/// The only dihedral scheme a cubic graph carries. Throws NotCubic.
DihedralScheme unique_cubic_scheme(const MultiGraph& g);

/// Inverse of truncation for signature (0,1,1).
struct Decomposition011 {
    DihedralScheme scheme;                  // base() is Lambda
    std::vector<std::vector<VertexId>> cycles;  // Lambda vertex -> girth cycle, in rotation order
    std::vector<EdgeId> lambda_edge_origin;     // Lambda edge -> edge of g on no girth cycle
    std::vector<VertexId> arc_vertex;           // Lambda arc -> its end vertex in g

    const MultiGraph& lambda() const noexcept { return scheme.base(); }

    /// Vertex map Tr(Lambda) -> g induced by `arc_vertex`.
    std::vector<VertexId> truncation_map(const TruncationResult& tr) const;
};

/// Each girth cycle becomes a vertex of Lambda, each edge on no girth cycle an
/// edge; the rotation at a cycle lists its attachment points in cycle order,
/// starting at the lowest vertex and heading to its lower-id cycle neighbour.
/// Throws NotSimple, NotGirthRegular, WrongSignature.
Decomposition011 decompose_011(const MultiGraph& g);

nlohmann::json to_json(const Decomposition011& d);

}  // namespace girthlab
