#include "girthlab/scheme.hpp"

#include <algorithm>
#include <string>

#include "girthlab/error.hpp"

namespace girthlab {

DihedralScheme::DihedralScheme(MultiGraph base, std::vector<std::vector<ArcId>> rotation)
    : base_(std::move(base)), rotation_(std::move(rotation)), position_(base_.arc_count(), SIZE_MAX) {
    if (rotation_.size() != base_.vertex_count()) {
        raise(ErrorCode::InvalidScheme, "expected " + std::to_string(base_.vertex_count()) + " rotations, got " +
                                            std::to_string(rotation_.size()));
    }
    for (VertexId v = 0; v < rotation_.size(); ++v) {
        const auto& rot = rotation_[v];
        if (rot.size() < 3) {
            raise(ErrorCode::InvalidScheme,
                  "vertex " + std::to_string(v) + " has valence " + std::to_string(rot.size()) + " < 3");
        }
        std::vector<ArcId> sorted(rot);
        std::sort(sorted.begin(), sorted.end());
        const auto out = base_.out_arcs(v);
        if (!std::equal(sorted.begin(), sorted.end(), out.begin(), out.end())) {
            raise(ErrorCode::InvalidScheme, "rotation at vertex " + std::to_string(v) + " is not a cyclic order of out(" +
                                                std::to_string(v) + ")");
        }
        for (std::size_t i = 0; i < rot.size(); ++i) position_[rot[i]] = i;
    }
}

std::pair<ArcId, ArcId> DihedralScheme::neighbours(ArcId a) const {
    const auto& rot = rotation_[base_.tail(a)];
    const std::size_t i = position_.at(a);
    return {rot[(i + rot.size() - 1) % rot.size()], rot[(i + 1) % rot.size()]};
}

bool DihedralScheme::related(ArcId s, ArcId t) const {
    if (s == t || base_.tail(s) != base_.tail(t)) return false;
    const auto [prev, next] = neighbours(s);
    return prev == t || next == t;
}

}  // namespace girthlab
