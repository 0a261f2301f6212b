#pragma once

#include <span>
#include <utility>
#include <vector>

#include "girthlab/multigraph.hpp"

namespace girthlab {

/// Dihedral scheme stored as one cyclic arc sequence (rotation) per vertex.
///
/// The relation between arcs is "consecutive in the rotation of their common
/// tail". Construction validates that the rotation at `u` is a cyclic order
/// of exactly `out(u)` and that every vertex has valence at least 3, which is
/// what makes the relation irreflexive, symmetric and 2-regular with the
/// out-sets as its components.
class DihedralScheme {
public:
    /// Throws InvalidScheme.
    DihedralScheme(MultiGraph base, std::vector<std::vector<ArcId>> rotation);

    const MultiGraph& base() const noexcept { return base_; }
    std::span<const ArcId> rotation(VertexId v) const { return rotation_.at(v); }
    const std::vector<std::vector<ArcId>>& rotations() const noexcept { return rotation_; }

    /// Predecessor and successor of `a` in the rotation at its tail.
    std::pair<ArcId, ArcId> neighbours(ArcId a) const;
    bool related(ArcId s, ArcId t) const;

private:
    MultiGraph base_;
    std::vector<std::vector<ArcId>> rotation_;
    std::vector<std::size_t> position_;  // arc -> index in its rotation
};

}  // namespace girthlab
