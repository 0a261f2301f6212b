#include "girthlab/maps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "girthlab/error.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/multigraph_json.hpp"

namespace girthlab {
namespace {

std::vector<ArcId> least_rotation(const std::vector<ArcId>& seq) {
    std::vector<ArcId> best = seq;
    std::vector<ArcId> cand(seq.size());
    for (std::size_t start = 1; start < seq.size(); ++start) {
        std::rotate_copy(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start), seq.end(), cand.begin());
        if (cand < best) best = cand;
    }
    return best;
}

/// Cycles of the 2-regular subgraph on edges with `keep[e]`, each listed from
/// its lowest vertex towards the lower-id neighbour. Cycles are ordered by
/// their lowest vertex.
std::vector<std::vector<VertexId>> factor_cycles(const MultiGraph& g, const std::vector<char>& keep,
                                                 std::vector<VertexId>& cycle_of) {
    std::vector<std::vector<VertexId>> cycles;
    cycle_of.assign(g.vertex_count(), UINT32_MAX);
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (cycle_of[start] != UINT32_MAX) continue;
        const auto id = static_cast<VertexId>(cycles.size());
        std::vector<VertexId> ends;
        for (ArcId a : g.out_arcs(start)) {
            if (keep[edge_of(a)]) ends.push_back(g.head(a));
        }
        VertexId prev = start;
        VertexId cur = std::min(ends.at(0), ends.at(1));
        std::vector<VertexId> walk{start};
        cycle_of[start] = id;
        while (cur != start) {
            walk.push_back(cur);
            cycle_of[cur] = id;
            VertexId next = cur;
            for (ArcId a : g.out_arcs(cur)) {
                if (keep[edge_of(a)] && g.head(a) != prev) next = g.head(a);
            }
            prev = cur;
            cur = next;
        }
        cycles.push_back(std::move(walk));
    }
    return cycles;
}

GirthReport checked_report(const MultiGraph& g, const Signature& want) {
    if (!g.is_simple()) raise(ErrorCode::NotSimple, "expected a simple graph");
    if (!g.is_connected()) raise(ErrorCode::Disconnected, "expected a connected graph");
    GirthReport report = girth_report(g);
    if (!report.regular) raise(ErrorCode::NotGirthRegular, "vertex signatures differ");
    if (*report.regular != want) {
        raise(ErrorCode::WrongSignature, "signature is " + report.regular->to_string() + ", expected " + want.to_string());
    }
    return report;
}

}  // namespace

ClosedWalk::ClosedWalk(const MultiGraph& g, std::vector<ArcId> arcs) {
    if (arcs.empty()) raise(ErrorCode::SchemaViolation, "empty walk");
    std::vector<EdgeId> seen;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const ArcId a = arcs[i];
        if (a >= g.arc_count()) raise(ErrorCode::SchemaViolation, "walk names arc " + std::to_string(a) + " outside the graph");
        if (g.head(a) != g.tail(arcs[(i + 1) % arcs.size()])) {
            raise(ErrorCode::SchemaViolation, "walk is not closed at position " + std::to_string(i));
        }
        seen.push_back(edge_of(a));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        raise(ErrorCode::SchemaViolation, "walk traverses an edge twice");
    }

    std::vector<ArcId> reversed(arcs.rbegin(), arcs.rend());
    for (ArcId& a : reversed) a = inverse(a);
    arcs_ = std::min(least_rotation(arcs), least_rotation(reversed));
}

MapComplex build_map(MultiGraph g, std::vector<ClosedWalk> walks) {
    if (!g.is_connected()) raise(ErrorCode::Disconnected, "skeleton is not connected");

    std::vector<std::uint32_t> cover(g.edge_count(), 0);
    for (const auto& w : walks) {
        for (ArcId a : w.arcs()) {
            if (a >= g.arc_count()) raise(ErrorCode::SchemaViolation, "walk names an arc outside the skeleton");
            ++cover[edge_of(a)];
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (cover[e] != 2) {
            raise(ErrorCode::EdgeCoverageViolation,
                  "edge " + std::to_string(e) + " lies on " + std::to_string(cover[e]) + " walks, expected 2");
        }
    }

    // Corner between consecutive arcs a, b of a walk: inverse(a) and b share a tail.
    std::vector<std::vector<ArcId>> related(g.arc_count());
    for (const auto& w : walks) {
        const auto& arcs = w.arcs();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const ArcId s = inverse(arcs[i]);
            const ArcId t = arcs[(i + 1) % arcs.size()];
            if (s == t) raise(ErrorCode::NotDihedral, "walk turns back along arc " + std::to_string(t));
            related[s].push_back(t);
            related[t].push_back(s);
        }
    }
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        auto& r = related[a];
        if (r.size() != 2 || r[0] == r[1]) {
            raise(ErrorCode::NotDihedral, "arc " + std::to_string(a) + " is related to " + std::to_string(r.size()) +
                                              " arcs, expected 2 distinct");
        }
        std::sort(r.begin(), r.end());
    }

    std::vector<std::vector<ArcId>> rotation(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto out = g.out_arcs(v);
        if (out.empty()) continue;
        const ArcId first = out.front();
        ArcId prev = first;
        ArcId cur = related[first][0];
        rotation[v].push_back(first);
        while (cur != first) {
            if (rotation[v].size() > out.size()) break;
            rotation[v].push_back(cur);
            const ArcId next = related[cur][0] == prev ? related[cur][1] : related[cur][0];
            prev = cur;
            cur = next;
        }
        if (rotation[v].size() != out.size() ||
            !std::all_of(rotation[v].begin(), rotation[v].end(), [&](ArcId a) { return g.tail(a) == v; })) {
            raise(ErrorCode::NotDihedral, "related arcs at vertex " + std::to_string(v) + " do not form one cycle on out(" +
                                              std::to_string(v) + ")");
        }
    }

    std::sort(walks.begin(), walks.end());
    try {
        DihedralScheme scheme(std::move(g), std::move(rotation));
        return MapComplex(std::move(scheme), std::move(walks));
    } catch (const Error& e) {
        raise(ErrorCode::NotDihedral, e.what());
    }
}

TruncationResult truncate_map(const MapComplex& m) { return truncate(m.scheme()); }

std::vector<ClosedWalk> girth_cycle_walks(const MultiGraph& g) {
    if (!g.is_simple()) raise(ErrorCode::NotSimple, "girth cycle walks need a simple graph");
    std::vector<ClosedWalk> walks;
    for (const auto& c : girth_cycles(g)) {
        std::vector<ArcId> arcs;
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            const EdgeId e = c.edges[i];
            arcs.push_back(2 * e + (g.edge(e).first == c.vertices[i] ? 0U : 1U));
        }
        walks.emplace_back(g, std::move(arcs));
    }
    return walks;
}

MapComplex map_from_222(const MultiGraph& g) {
    const GirthReport report = checked_report(g, Signature({2, 2, 2}));
    const std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
    const auto girth_len = static_cast<std::int64_t>(report.girth);
    if ((3 * n) % girth_len != 0) throw std::logic_error("girth does not divide 3n for a (2,2,2) graph");

    MapComplex m = build_map(g, girth_cycle_walks(g));
    if (2 * girth_len * m.euler_characteristic() != n * (6 - girth_len)) {
        throw std::logic_error("Euler characteristic disagrees with n(3/g - 1/2)");
    }
    return m;
}

std::vector<VertexId> Decomposition112::truncation_map(const TruncationResult& tr) const {
    std::vector<VertexId> map(tr.vertex_origin.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = arc_vertex.at(tr.vertex_origin[i]);
    return map;
}

Decomposition112 decompose_112(const MultiGraph& g) {
    const GirthReport report = checked_report(g, Signature({1, 1, 2}));
    if (report.girth % 2 != 0) raise(ErrorCode::OddGirth, "signature (1,1,2) with odd girth " + std::to_string(report.girth));

    std::vector<char> in_x(g.edge_count());
    std::vector<char> in_y(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        in_x[e] = report.epsilon[e] == 1;
        in_y[e] = report.epsilon[e] == 2;
    }
    std::vector<VertexId> cycle_of;
    auto x_cycles = factor_cycles(g, in_x, cycle_of);

    std::vector<Edge> lambda_edges;
    std::vector<EdgeId> origin;
    std::vector<EdgeId> lambda_index(g.edge_count(), UINT32_MAX);
    std::vector<VertexId> arc_vertex;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!in_y[e]) continue;
        const Edge& ed = g.edge(e);
        lambda_index[e] = static_cast<EdgeId>(lambda_edges.size());
        lambda_edges.push_back({cycle_of[ed.first], cycle_of[ed.second]});
        origin.push_back(e);
        arc_vertex.push_back(ed.first);
        arc_vertex.push_back(ed.second);
    }
    MultiGraph lambda(x_cycles.size(), std::move(lambda_edges));

    std::vector<ClosedWalk> faces;
    for (const auto& walk : girth_cycle_walks(g)) {
        std::vector<ArcId> hat;
        for (ArcId a : walk.arcs()) {
            if (in_y[edge_of(a)]) hat.push_back(2 * lambda_index[edge_of(a)] + (a & 1U));
        }
        if (hat.size() * 2 != report.girth) throw std::logic_error("girth cycle does not alternate between X and Y");
        faces.emplace_back(lambda, std::move(hat));
    }
    MapComplex m = build_map(std::move(lambda), std::move(faces));
    return Decomposition112{std::move(m), std::move(in_y), std::move(x_cycles), std::move(origin), std::move(arc_vertex)};
}

nlohmann::json to_json(const MapComplex& m) {
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& f : m.faces()) {
        nlohmann::json walk = nlohmann::json::array();
        for (ArcId a : f.arcs()) walk.push_back(arc_ref_json(m.skeleton(), a));
        faces.push_back(std::move(walk));
    }
    return nlohmann::json{{"skeleton", write_multigraph_json(m.skeleton(), &m.scheme())},
                          {"faces", std::move(faces)},
                          {"chi", m.euler_characteristic()},
                          {"nonOrientableForced", m.non_orientable_forced()}};
}

nlohmann::json to_json(const Decomposition112& d) {
    std::string colouring;
    for (char y : d.in_y) colouring += y ? 'Y' : 'X';
    nlohmann::json arcs = nlohmann::json::array();
    for (ArcId a = 0; a < d.arc_vertex.size(); ++a) {
        nlohmann::json ref = arc_ref_json(d.map.skeleton(), a);
        ref["vertex"] = d.arc_vertex[a];
        arcs.push_back(std::move(ref));
    }
    return nlohmann::json{{"mode", "112"},
                          {"map", to_json(d.map)},
                          {"edgeColouring", colouring},
                          {"xCycles", d.x_cycles},
                          {"edgeOrigin", d.lambda_edge_origin},
                          {"arcVertex", std::move(arcs)}};
}

MapComplex read_map_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("skeleton") || !doc.contains("faces") || !doc.at("faces").is_array()) {
        raise(ErrorCode::SchemaViolation, "map document needs 'skeleton' and 'faces'");
    }
    GraphDocument skel = read_multigraph_json(doc.at("skeleton"));
    std::vector<ClosedWalk> faces;
    for (const auto& face : doc.at("faces")) {
        if (!face.is_array()) raise(ErrorCode::SchemaViolation, "face must be an array of arc refs");
        std::vector<ArcId> arcs;
        for (const auto& ref : face) arcs.push_back(arc_from_json(skel.graph, ref));
        faces.emplace_back(skel.graph, std::move(arcs));
    }
    return build_map(std::move(skel.graph), std::move(faces));
}

}  // namespace girthlab
