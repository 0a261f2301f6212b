#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "girthlab/multigraph.hpp"
#include "girthlab/scheme.hpp"

namespace girthlab {

struct GraphDocument {
    MultiGraph graph;
    std::optional<DihedralScheme> scheme;
};

/// Reads {"vertices": n, "edges": [{"id": i, "ends": [v] | [v, w]}, ...],
/// "scheme": optional list of rotation cycles of arc refs
/// {"edge": id, "tail": v, "end": 0 | 1}}.
///
/// Edge ids must be a permutation of 0..m-1. Throws SchemaViolation,
/// DanglingEndpoint or InvalidScheme.
GraphDocument read_multigraph_json(const nlohmann::json& doc);

nlohmann::json write_multigraph_json(const MultiGraph& g, const DihedralScheme* scheme = nullptr);

nlohmann::json arc_ref_json(const MultiGraph& g, ArcId a);

/// Resolves an arc ref against `g`; throws InvalidScheme when it does not
/// name an arc of `g`.
ArcId arc_from_json(const MultiGraph& g, const nlohmann::json& ref);

}  // namespace girthlab
