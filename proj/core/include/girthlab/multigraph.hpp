#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace girthlab {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Dense arc index: arc `2 * e + end` is the side of edge `e` whose tail is
/// the edge's `end`-th endpoint. The two arcs of an edge are `a` and `a ^ 1`.
using ArcId = std::uint32_t;

struct Edge {
    VertexId first = 0;
    VertexId second = 0;

    bool is_loop() const noexcept { return first == second; }
};

/// Directed side of an undirected edge.
struct Arc {
    EdgeId edge = 0;
    VertexId tail = 0;
    std::uint8_t end = 0;  // 0: tail is Edge::first, 1: tail is Edge::second

    ArcId id() const noexcept { return 2 * edge + end; }
    friend bool operator==(const Arc&, const Arc&) = default;
};

constexpr ArcId inverse(ArcId a) noexcept { return a ^ 1U; }
constexpr EdgeId edge_of(ArcId a) noexcept { return a >> 1; }

/// Finite undirected graph that may carry loops and parallel edges.
///
/// Vertices are `0..n-1`; edge ids are `0..m-1` in insertion order. The
/// value is immutable after construction, so concurrent readers need no
/// synchronisation.
class MultiGraph {
public:
    MultiGraph() = default;

    /// Throws DanglingEndpoint when an endpoint is not below `vertex_count`.
    MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t arc_count() const noexcept { return 2 * edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    /// Arcs whose tail is `v`, ascending by arc id. A loop contributes both arcs.
    std::span<const ArcId> out_arcs(VertexId v) const;
    std::size_t degree(VertexId v) const { return out_arcs(v).size(); }

    VertexId tail(ArcId a) const noexcept;
    VertexId head(ArcId a) const noexcept { return tail(inverse(a)); }
    Arc arc(ArcId a) const noexcept { return Arc{edge_of(a), tail(a), static_cast<std::uint8_t>(a & 1U)}; }

    /// Other endpoint of `e` seen from `v` (returns `v` for loops).
    VertexId other_end(EdgeId e, VertexId v) const;

    /// Number of edges joining `u` and `v` (loops at `u` when `u == v`).
    std::size_t multiplicity(VertexId u, VertexId v) const;

    bool has_loops() const noexcept { return loop_count_ > 0; }
    bool has_parallel_edges() const noexcept { return parallel_pairs_ > 0; }
    bool is_simple() const noexcept { return !has_loops() && !has_parallel_edges(); }

    std::size_t min_degree() const noexcept;
    std::size_t max_degree() const noexcept;
    bool is_regular() const noexcept { return min_degree() == max_degree(); }
    bool is_connected() const;

    /// Simple-graph neighbour list of `v` without repetitions, ascending.
    std::vector<VertexId> neighbours(VertexId v) const;

    /// Edge id joining `u` and `v`, if any (the smallest when parallel).
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_;
    std::vector<ArcId> out_arcs_;
    std::size_t loop_count_ = 0;
    std::size_t parallel_pairs_ = 0;
};

/// Convenience builder for simple graphs given as vertex pairs.
MultiGraph make_graph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& pairs);

/// Relabels vertices: vertex `v` of `g` becomes `perm[v]`. Edge ids are kept.
MultiGraph relabel(const MultiGraph& g, std::span<const VertexId> perm);

}  // namespace girthlab
