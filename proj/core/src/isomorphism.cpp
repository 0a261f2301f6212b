#include "girthlab/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "girthlab/error.hpp"

namespace girthlab {
namespace {

using Colouring = std::vector<std::uint32_t>;

/// Neighbourhood with multiplicities; loops appear as (v, loop count).
struct Adjacency {
    std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> lists;

    explicit Adjacency(const MultiGraph& g) : lists(g.vertex_count()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<VertexId> heads;
            for (ArcId a : g.out_arcs(v)) heads.push_back(g.head(a));
            std::sort(heads.begin(), heads.end());
            for (std::size_t i = 0; i < heads.size();) {
                std::size_t j = i;
                while (j < heads.size() && heads[j] == heads[i]) ++j;
                auto count = static_cast<std::uint32_t>(j - i);
                if (heads[i] == v) count /= 2;
                lists[v].emplace_back(heads[i], count);
                i = j;
            }
        }
    }
};

class Matcher {
public:
    Matcher(const MultiGraph& g, const MultiGraph& h) : g_(g), h_(h), adj_g_(g), adj_h_(h) {}

    std::optional<std::vector<VertexId>> run() {
        const std::size_t n = g_.vertex_count();
        Colouring cg(n, 0);
        Colouring ch(n, 0);
        return search(cg, ch);
    }

private:
    using Signature = std::vector<std::uint64_t>;

    static Signature signature(const Adjacency& adj, const Colouring& c, VertexId v) {
        Signature s;
        s.reserve(adj.lists[v].size() + 1);
        s.push_back(c[v]);
        const std::size_t head = s.size();
        for (auto [w, mult] : adj.lists[v]) {
            // Loop entries carry the top bit.
            const std::uint64_t tag = (w == v) ? (std::uint64_t{1} << 63) : 0;
            s.push_back(tag | (std::uint64_t{c[w]} << 32) | mult);
        }
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(head), s.end());
        return s;
    }

    static std::size_t class_count(const Colouring& c) {
        Colouring sorted(c);
        std::sort(sorted.begin(), sorted.end());
        return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    /// Refines both colourings to the joint stable partition. Returns false
    /// as soon as a colour class has different sizes in the two graphs.
    bool refine(Colouring& cg, Colouring& ch) const {
        const std::size_t n = cg.size();
        std::size_t classes = class_count(cg);
        for (;;) {
            std::vector<Signature> sigs;
            sigs.reserve(2 * n);
            for (VertexId v = 0; v < n; ++v) sigs.push_back(signature(adj_g_, cg, v));
            for (VertexId v = 0; v < n; ++v) sigs.push_back(signature(adj_h_, ch, v));
            std::vector<std::uint32_t> order(2 * n);
            std::iota(order.begin(), order.end(), 0U);
            std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sigs[a] < sigs[b]; });

            std::uint32_t colour = 0;
            std::size_t in_g = 0;
            std::size_t in_h = 0;
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (i > 0 && sigs[order[i]] != sigs[order[i - 1]]) {
                    if (in_g != in_h) return false;
                    ++colour;
                    in_g = in_h = 0;
                }
                const std::uint32_t idx = order[i];
                if (idx < n) {
                    cg[idx] = colour;
                    ++in_g;
                } else {
                    ch[idx - n] = colour;
                    ++in_h;
                }
            }
            if (in_g != in_h) return false;
            const std::size_t now = colour + (order.empty() ? 0 : 1);
            if (now == classes) return true;
            classes = now;
        }
    }

    std::optional<std::vector<VertexId>> search(Colouring cg, Colouring ch) {
        if (!refine(cg, ch)) return std::nullopt;
        const std::size_t n = cg.size();

        std::vector<std::size_t> size(n + 1, 0);
        for (auto c : cg) ++size[c];
        std::uint32_t target = UINT32_MAX;
        for (std::uint32_t c = 0; c < size.size(); ++c) {
            if (size[c] > 1 && (target == UINT32_MAX || size[c] < size[target])) target = c;
        }
        if (target == UINT32_MAX) {
            std::vector<VertexId> by_colour(n);
            for (VertexId w = 0; w < n; ++w) by_colour[ch[w]] = w;
            std::vector<VertexId> map(n);
            for (VertexId v = 0; v < n; ++v) map[v] = by_colour[cg[v]];
            if (is_isomorphism(g_, h_, map)) return map;
            return std::nullopt;
        }

        const VertexId v = static_cast<VertexId>(std::find(cg.begin(), cg.end(), target) - cg.begin());
        const auto fresh = static_cast<std::uint32_t>(n);
        for (VertexId w = 0; w < n; ++w) {
            if (ch[w] != target) continue;
            Colouring ng(cg);
            Colouring nh(ch);
            ng[v] = fresh;
            nh[w] = fresh;
            if (auto found = search(std::move(ng), std::move(nh))) return found;
        }
        return std::nullopt;
    }

    const MultiGraph& g_;
    const MultiGraph& h_;
    Adjacency adj_g_;
    Adjacency adj_h_;
};

std::vector<std::pair<VertexId, VertexId>> edge_multiset(const MultiGraph& g, std::span<const VertexId> map) {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const VertexId a = map.empty() ? e.first : map[e.first];
        const VertexId b = map.empty() ? e.second : map[e.second];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_isomorphism(const MultiGraph& g, const MultiGraph& h, std::span<const VertexId> map) {
    const std::size_t n = g.vertex_count();
    if (n != h.vertex_count() || map.size() != n || g.edge_count() != h.edge_count()) return false;
    std::vector<char> hit(n, 0);
    for (VertexId w : map) {
        if (w >= n || hit[w]) return false;
        hit[w] = 1;
    }
    return edge_multiset(g, map) == edge_multiset(h, {});
}

std::optional<std::vector<VertexId>> find_isomorphism(const MultiGraph& g, const MultiGraph& h, std::size_t vertex_cap) {
    if (g.vertex_count() > vertex_cap || h.vertex_count() > vertex_cap) {
        raise(ErrorCode::SizeCapExceeded, "isomorphism test limited to " + std::to_string(vertex_cap) + " vertices (got " +
                                              std::to_string(std::max(g.vertex_count(), h.vertex_count())) + ")");
    }
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    return Matcher(g, h).run();
}

}  // namespace girthlab
