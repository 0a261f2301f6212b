#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "girthlab/multigraph.hpp"
#include "girthlab/scheme.hpp"
#include "girthlab/truncation.hpp"

namespace girthlab {

/// Closed walk given by its arcs, traversing each edge at most once.
///
/// The stored form is normalised over all rotations and both directions to
/// the lexicographically least arc sequence, so equal walks compare equal.
class ClosedWalk {
public:
    /// Throws SchemaViolation when the arcs do not close up or repeat an edge.
    ClosedWalk(const MultiGraph& g, std::vector<ArcId> arcs);

    const std::vector<ArcId>& arcs() const noexcept { return arcs_; }
    std::size_t length() const noexcept { return arcs_.size(); }

    friend auto operator<=>(const ClosedWalk&, const ClosedWalk&) = default;

private:
    std::vector<ArcId> arcs_;
};

/// 2-cell map held combinatorially: skeleton, face walks and the rotation
/// they induce at every vertex.
class MapComplex {
public:
    const MultiGraph& skeleton() const noexcept { return scheme_.base(); }
    const DihedralScheme& scheme() const noexcept { return scheme_; }
    const std::vector<ClosedWalk>& faces() const noexcept { return faces_; }

    std::int64_t euler_characteristic() const noexcept {
        return static_cast<std::int64_t>(skeleton().vertex_count()) - static_cast<std::int64_t>(skeleton().edge_count()) +
               static_cast<std::int64_t>(faces_.size());
    }
    bool non_orientable_forced() const noexcept { return euler_characteristic() % 2 != 0; }

private:
    MapComplex(DihedralScheme scheme, std::vector<ClosedWalk> faces) : scheme_(std::move(scheme)), faces_(std::move(faces)) {}
    friend MapComplex build_map(MultiGraph g, std::vector<ClosedWalk> walks);

    DihedralScheme scheme_;
    std::vector<ClosedWalk> faces_;  // sorted
};

/// Arcs s, t with a common tail are related when their edges are consecutive
/// on a walk. Throws Disconnected, EdgeCoverageViolation (an edge not on
/// exactly two walks) and NotDihedral (the relation is not 2-regular with the
/// out-sets as components).
MapComplex build_map(MultiGraph g, std::vector<ClosedWalk> walks);

/// Truncation of the skeleton with respect to the induced scheme.
TruncationResult truncate_map(const MapComplex& m);

/// Map whose faces are the girth cycles of a (2,2,2) graph.
/// Throws NotSimple, Disconnected, NotGirthRegular, WrongSignature.
MapComplex map_from_222(const MultiGraph& g);

/// Truncated-map decomposition of a (1,1,2) graph.
struct Decomposition112 {
    MapComplex map;
    std::vector<char> in_y;                       // edge of g -> on two girth cycles
    std::vector<std::vector<VertexId>> x_cycles;  // skeleton vertex -> cycle of X edges
    std::vector<EdgeId> lambda_edge_origin;       // skeleton edge -> Y edge of g
    std::vector<VertexId> arc_vertex;             // skeleton arc -> its tail in g

    /// Vertex map Tr(map) -> g induced by `arc_vertex`.
    std::vector<VertexId> truncation_map(const TruncationResult& tr) const;
};

/// Throws NotSimple, Disconnected, NotGirthRegular, WrongSignature, OddGirth.
Decomposition112 decompose_112(const MultiGraph& g);

/// Girth cycles of a simple graph as arc walks.
std::vector<ClosedWalk> girth_cycle_walks(const MultiGraph& g);

nlohmann::json to_json(const MapComplex& m);
nlohmann::json to_json(const Decomposition112& d);

/// Reads {"skeleton": multigraph-json, "faces": [[arcRef...]...]} and rebuilds
/// the map through build_map. Other fields are ignored.
MapComplex read_map_json(const nlohmann::json& doc);

}  // namespace girthlab
