#include "girthlab/multigraph_json.hpp"

#include <string>

#include "girthlab/error.hpp"

namespace girthlab {
namespace {

using nlohmann::json;

std::int64_t require_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number_integer()) {
        raise(ErrorCode::SchemaViolation, where + ": missing integer field '" + key + "'");
    }
    return obj.at(key).get<std::int64_t>();
}

}  // namespace

json arc_ref_json(const MultiGraph& g, ArcId a) {
    const Arc arc = g.arc(a);
    return json{{"edge", arc.edge}, {"tail", arc.tail}, {"end", arc.end}};
}

ArcId arc_from_json(const MultiGraph& g, const json& ref) {
    const std::int64_t edge = require_int(ref, "edge", "arc ref");
    const std::int64_t tail = require_int(ref, "tail", "arc ref");
    const std::int64_t end = require_int(ref, "end", "arc ref");
    if (edge < 0 || static_cast<std::size_t>(edge) >= g.edge_count() || (end != 0 && end != 1)) {
        raise(ErrorCode::InvalidScheme, "arc ref " + ref.dump() + " does not name an arc");
    }
    const ArcId a = 2 * static_cast<ArcId>(edge) + static_cast<ArcId>(end);
    if (static_cast<std::int64_t>(g.tail(a)) != tail) {
        raise(ErrorCode::InvalidScheme, "arc ref " + ref.dump() + " has inconsistent tail");
    }
    return a;
}

GraphDocument read_multigraph_json(const json& doc) {
    if (!doc.is_object()) raise(ErrorCode::SchemaViolation, "document is not an object");
    const std::int64_t n = require_int(doc, "vertices", "document");
    if (n < 0) raise(ErrorCode::SchemaViolation, "negative vertex count");
    if (!doc.contains("edges") || !doc.at("edges").is_array()) {
        raise(ErrorCode::SchemaViolation, "document: missing array field 'edges'");
    }
    const json& edge_docs = doc.at("edges");
    std::vector<Edge> edges(edge_docs.size());
    std::vector<char> seen(edge_docs.size(), 0);
    for (const json& ed : edge_docs) {
        const std::int64_t id = require_int(ed, "id", "edge");
        if (id < 0 || static_cast<std::size_t>(id) >= edges.size() || seen[id]) {
            raise(ErrorCode::SchemaViolation, "edge ids must be a permutation of 0.." + std::to_string(edges.size()) +
                                                  "-1 (offending id " + std::to_string(id) + ")");
        }
        seen[id] = 1;
        if (!ed.contains("ends") || !ed.at("ends").is_array()) {
            raise(ErrorCode::SchemaViolation, "edge " + std::to_string(id) + ": missing array field 'ends'");
        }
        const json& ends = ed.at("ends");
        if (ends.empty() || ends.size() > 2) {
            raise(ErrorCode::SchemaViolation, "edge " + std::to_string(id) + ": 'ends' must have 1 or 2 entries");
        }
        std::vector<std::int64_t> vs;
        for (const json& v : ends) {
            if (!v.is_number_integer()) raise(ErrorCode::SchemaViolation, "edge " + std::to_string(id) + ": non-integer end");
            vs.push_back(v.get<std::int64_t>());
        }
        if (vs.size() == 2 && vs[0] == vs[1]) {
            raise(ErrorCode::SchemaViolation, "edge " + std::to_string(id) + ": a loop is written with a single end");
        }
        for (std::int64_t v : vs) {
            if (v < 0 || v >= n) {
                raise(ErrorCode::DanglingEndpoint, "edge " + std::to_string(id) + " references vertex " + std::to_string(v));
            }
        }
        edges[id] = Edge{static_cast<VertexId>(vs.front()), static_cast<VertexId>(vs.back())};
    }

    GraphDocument out{MultiGraph(static_cast<std::size_t>(n), std::move(edges)), std::nullopt};
    if (!doc.contains("scheme") || doc.at("scheme").is_null()) return out;

    const json& cycles = doc.at("scheme");
    if (!cycles.is_array()) raise(ErrorCode::SchemaViolation, "'scheme' must be an array of rotation cycles");
    const MultiGraph& g = out.graph;
    std::vector<std::vector<ArcId>> rotation(g.vertex_count());
    std::vector<char> has_rotation(g.vertex_count(), 0);
    for (const json& cycle : cycles) {
        if (!cycle.is_array() || cycle.empty()) raise(ErrorCode::SchemaViolation, "rotation cycle must be a non-empty array");
        std::vector<ArcId> arcs;
        for (const json& ref : cycle) arcs.push_back(arc_from_json(g, ref));
        const VertexId tail = g.tail(arcs.front());
        for (ArcId a : arcs) {
            if (g.tail(a) != tail) raise(ErrorCode::InvalidScheme, "rotation cycle mixes arcs with different tails");
        }
        if (has_rotation[tail]) raise(ErrorCode::InvalidScheme, "two rotation cycles at vertex " + std::to_string(tail));
        has_rotation[tail] = 1;
        rotation[tail] = std::move(arcs);
    }
    out.scheme.emplace(g, std::move(rotation));
    return out;
}

json write_multigraph_json(const MultiGraph& g, const DihedralScheme* scheme) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        json ends = ed.is_loop() ? json::array({ed.first}) : json::array({ed.first, ed.second});
        edges.push_back(json{{"id", e}, {"ends", std::move(ends)}});
    }
    json doc{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
    if (scheme != nullptr) {
        json cycles = json::array();
        for (const auto& rot : scheme->rotations()) {
            json cycle = json::array();
            for (ArcId a : rot) cycle.push_back(arc_ref_json(g, a));
            cycles.push_back(std::move(cycle));
        }
        doc["scheme"] = std::move(cycles);
    }
    return doc;
}

}  // namespace girthlab
