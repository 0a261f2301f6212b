#include "girthlab/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "girthlab/error.hpp"

namespace girthlab {

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
    out_offsets_.assign(vertex_count + 1, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.first >= vertex_count || ed.second >= vertex_count) {
            raise(ErrorCode::DanglingEndpoint, "edge " + std::to_string(e) + " references vertex " +
                                                   std::to_string(std::max(ed.first, ed.second)) + " but n = " +
                                                   std::to_string(vertex_count));
        }
        ++out_offsets_[ed.first + 1];
        ++out_offsets_[ed.second + 1];
        if (ed.is_loop()) ++loop_count_;
    }
    std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());

    out_arcs_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(out_offsets_.begin(), out_offsets_.end() - 1);
    // Arc ids increase with the loop index, so each out-list comes out sorted.
    for (ArcId a = 0; a < out_arcs_.size(); ++a) {
        const Edge& ed = edges_[edge_of(a)];
        const VertexId t = (a & 1U) ? ed.second : ed.first;
        out_arcs_[fill[t]++] = a;
    }

    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(edges_.size());
    for (const Edge& ed : edges_) {
        if (!ed.is_loop()) keys.emplace_back(std::min(ed.first, ed.second), std::max(ed.first, ed.second));
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < keys.size(); ++i) {
        if (keys[i] == keys[i - 1]) ++parallel_pairs_;
    }
}

std::span<const ArcId> MultiGraph::out_arcs(VertexId v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return {out_arcs_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

VertexId MultiGraph::tail(ArcId a) const noexcept {
    const Edge& ed = edges_[edge_of(a)];
    return (a & 1U) ? ed.second : ed.first;
}

VertexId MultiGraph::other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edges_.at(e);
    if (ed.first == v) return ed.second;
    if (ed.second == v) return ed.first;
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not an end of edge " + std::to_string(e));
}

std::size_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
    std::size_t count = 0;
    for (ArcId a : out_arcs(u)) {
        if (head(a) == v) ++count;
    }
    // A loop shows up twice in out(u).
    return u == v ? count / 2 : count;
}

std::size_t MultiGraph::min_degree() const noexcept {
    std::size_t best = vertex_count() == 0 ? 0 : SIZE_MAX;
    for (std::size_t v = 0; v + 1 < out_offsets_.size(); ++v) best = std::min(best, out_offsets_[v + 1] - out_offsets_[v]);
    return best;
}

std::size_t MultiGraph::max_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v + 1 < out_offsets_.size(); ++v) best = std::max(best, out_offsets_[v + 1] - out_offsets_[v]);
    return best;
}

bool MultiGraph::is_connected() const {
    const std::size_t n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (ArcId a : out_arcs(v)) {
            const VertexId w = head(a);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<VertexId> MultiGraph::neighbours(VertexId v) const {
    std::vector<VertexId> out;
    for (ArcId a : out_arcs(v)) out.push_back(head(a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<EdgeId> MultiGraph::find_edge(VertexId u, VertexId v) const {
    for (ArcId a : out_arcs(u)) {
        if (head(a) == v) return edge_of(a);
    }
    return std::nullopt;
}

MultiGraph make_graph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return MultiGraph(vertex_count, std::move(edges));
}

MultiGraph relabel(const MultiGraph& g, std::span<const VertexId> perm) {
    if (perm.size() != g.vertex_count()) throw std::invalid_argument("permutation size does not match vertex count");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.first], perm[e.second]});
    return MultiGraph(g.vertex_count(), std::move(edges));
}

}  // namespace girthlab
