#include "girthlab/truncation.hpp"

#include <string>

#include "girthlab/error.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/multigraph_json.hpp"

namespace girthlab {

TruncationResult truncate(const DihedralScheme& scheme) {
    const MultiGraph& base = scheme.base();
    TruncationResult out;
    std::vector<VertexId> index(base.arc_count());
    out.vertex_origin.reserve(base.arc_count());
    for (VertexId v = 0; v < base.vertex_count(); ++v) {
        for (ArcId a : base.out_arcs(v)) {
            index[a] = static_cast<VertexId>(out.vertex_origin.size());
            out.vertex_origin.push_back(a);
        }
    }

    std::vector<Edge> edges;
    edges.reserve(base.edge_count() + base.arc_count());
    for (EdgeId e = 0; e < base.edge_count(); ++e) edges.push_back({index[2 * e], index[2 * e + 1]});
    for (VertexId v = 0; v < base.vertex_count(); ++v) {
        const auto rot = scheme.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const ArcId s = rot[i];
            const ArcId t = rot[(i + 1) % rot.size()];
            if (t == inverse(s)) {
                raise(ErrorCode::InvalidScheme, "loop " + std::to_string(edge_of(s)) + " has both arcs adjacent in the rotation at " +
                                                    std::to_string(v) + "; truncation would not be simple");
            }
            edges.push_back({index[s], index[t]});
        }
    }
    out.graph = MultiGraph(out.vertex_origin.size(), std::move(edges));
    return out;
}

DihedralScheme unique_cubic_scheme(const MultiGraph& g) {
    std::vector<std::vector<ArcId>> rotation(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto out = g.out_arcs(v);
        if (out.size() != 3) raise(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has valence " + std::to_string(out.size()));
        rotation[v].assign(out.begin(), out.end());
    }
    return DihedralScheme(g, std::move(rotation));
}

std::vector<VertexId> Decomposition011::truncation_map(const TruncationResult& tr) const {
    std::vector<VertexId> map(tr.vertex_origin.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = arc_vertex.at(tr.vertex_origin[i]);
    return map;
}

Decomposition011 decompose_011(const MultiGraph& g) {
    if (!g.is_simple()) raise(ErrorCode::NotSimple, "decompose 011 needs a simple graph");
    const GirthReport report = girth_report(g);
    if (!report.regular) raise(ErrorCode::NotGirthRegular, "vertex signatures differ");
    if (*report.regular != Signature({0, 1, 1})) {
        raise(ErrorCode::WrongSignature, "signature is " + report.regular->to_string() + ", expected (0,1,1)");
    }
    const auto& eps = report.epsilon;
    const std::size_t n = g.vertex_count();

    // The epsilon = 1 edges form a 2-factor whose components are the girth cycles.
    std::vector<std::vector<VertexId>> cycles;
    std::vector<VertexId> cycle_of(n, UINT32_MAX);
    for (VertexId start = 0; start < n; ++start) {
        if (cycle_of[start] != UINT32_MAX) continue;
        const auto id = static_cast<VertexId>(cycles.size());
        std::vector<VertexId> on_cycle;
        for (ArcId a : g.out_arcs(start)) {
            if (eps[edge_of(a)] == 1) on_cycle.push_back(g.head(a));
        }
        VertexId prev = start;
        VertexId cur = std::min(on_cycle[0], on_cycle[1]);
        std::vector<VertexId> walk{start};
        cycle_of[start] = id;
        while (cur != start) {
            walk.push_back(cur);
            cycle_of[cur] = id;
            VertexId next = cur;
            for (ArcId a : g.out_arcs(cur)) {
                if (eps[edge_of(a)] == 1 && g.head(a) != prev) next = g.head(a);
            }
            prev = cur;
            cur = next;
        }
        cycles.push_back(std::move(walk));
    }

    std::vector<Edge> lambda_edges;
    std::vector<EdgeId> origin;
    std::vector<ArcId> arc_at(n, UINT32_MAX);  // g vertex -> Lambda arc ending there
    std::vector<VertexId> arc_vertex;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (eps[e] != 0) continue;
        const Edge& ed = g.edge(e);
        const auto le = static_cast<EdgeId>(lambda_edges.size());
        lambda_edges.push_back({cycle_of[ed.first], cycle_of[ed.second]});
        origin.push_back(e);
        arc_at[ed.first] = 2 * le;
        arc_at[ed.second] = 2 * le + 1;
        arc_vertex.push_back(ed.first);
        arc_vertex.push_back(ed.second);
    }

    std::vector<std::vector<ArcId>> rotation(cycles.size());
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        for (VertexId x : cycles[c]) rotation[c].push_back(arc_at[x]);
    }
    MultiGraph lambda(cycles.size(), std::move(lambda_edges));
    return Decomposition011{DihedralScheme(std::move(lambda), std::move(rotation)), std::move(cycles), std::move(origin),
                            std::move(arc_vertex)};
}

nlohmann::json to_json(const Decomposition011& d) {
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& c : d.cycles) cycles.push_back(c);
    nlohmann::json arcs = nlohmann::json::array();
    for (ArcId a = 0; a < d.arc_vertex.size(); ++a) {
        nlohmann::json ref = arc_ref_json(d.lambda(), a);
        ref["vertex"] = d.arc_vertex[a];
        arcs.push_back(std::move(ref));
    }
    return nlohmann::json{{"mode", "011"},
                          {"lambda", write_multigraph_json(d.lambda(), &d.scheme)},
                          {"girthCycles", std::move(cycles)},
                          {"edgeOrigin", d.lambda_edge_origin},
                          {"arcVertex", std::move(arcs)}};
}

}  // namespace girthlab
