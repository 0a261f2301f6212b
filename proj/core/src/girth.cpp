#include "girthlab/girth.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <thread>

#include "girthlab/error.hpp"

namespace girthlab {
namespace {

constexpr int kUnseen = -1;

/// Depth-limited BFS with O(visited) reset, reused across edges.
class Ball {
public:
    explicit Ball(std::size_t n) : dist_(n, kUnseen) {}

    void grow(const MultiGraph& g, VertexId source, int depth, VertexId blocked = UINT32_MAX) {
        clear();
        dist_[source] = 0;
        order_.push_back(source);
        for (std::size_t head = 0; head < order_.size(); ++head) {
            const VertexId x = order_[head];
            if (dist_[x] == depth) continue;
            for (ArcId a : g.out_arcs(x)) {
                const VertexId y = g.head(a);
                if (y == blocked || dist_[y] != kUnseen) continue;
                dist_[y] = dist_[x] + 1;
                order_.push_back(y);
            }
        }
    }

    void clear() {
        for (VertexId x : order_) dist_[x] = kUnseen;
        order_.clear();
    }

    int operator[](VertexId v) const { return dist_[v]; }
    const std::vector<VertexId>& visited() const noexcept { return order_; }

private:
    std::vector<int> dist_;
    std::vector<VertexId> order_;
};

std::size_t simple_girth(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = SIZE_MAX;
    std::vector<int> dist(n, kUnseen);
    std::vector<EdgeId> via(n, UINT32_MAX);
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        queue.assign(1, s);
        dist[s] = 0;
        via[s] = UINT32_MAX;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId x = queue[head];
            if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best) break;
            for (ArcId a : g.out_arcs(x)) {
                const EdgeId e = edge_of(a);
                if (e == via[x]) continue;
                const VertexId y = g.head(a);
                if (dist[y] == kUnseen) {
                    dist[y] = dist[x] + 1;
                    via[y] = e;
                    queue.push_back(y);
                } else {
                    best = std::min(best, static_cast<std::size_t>(dist[x] + dist[y] + 1));
                }
            }
        }
        for (VertexId x : queue) dist[x] = kUnseen;
    }
    return best;
}

/// Girth-cycle count through the edge uv of a simple graph of girth g >= 3,
/// read off the distance partition around uv: for odd g = 2d+1 it is
/// |D^d_d|, for even g = 2d the number of edges between D^{d-1}_d and
/// D^d_{d-1}.
std::uint64_t count_through_edge(const MultiGraph& g, std::size_t girth_len, VertexId u, VertexId v, Ball& from_u,
                                 Ball& from_v) {
    const int d = static_cast<int>(girth_len / 2);
    from_u.grow(g, u, d);
    from_v.grow(g, v, d);
    std::uint64_t count = 0;
    if (girth_len % 2 == 1) {
        for (VertexId y : from_u.visited()) {
            if (from_u[y] == d && from_v[y] == d) ++count;
        }
        return count;
    }
    for (VertexId x : from_u.visited()) {
        if (from_u[x] != d - 1 || from_v[x] != d) continue;
        for (ArcId a : g.out_arcs(x)) {
            const VertexId y = g.head(a);
            if (from_u[y] == d && from_v[y] == d - 1) ++count;
        }
    }
    return count;
}

std::uint64_t epsilon_with(const MultiGraph& g, std::size_t girth_len, EdgeId e, Ball& a, Ball& b) {
    const Edge& ed = g.edge(e);
    if (girth_len == 1) return ed.is_loop() ? 1 : 0;
    if (girth_len == 2) return ed.is_loop() ? 0 : g.multiplicity(ed.first, ed.second) - 1;
    return count_through_edge(g, girth_len, ed.first, ed.second, a, b);
}

/// Number of simple paths with exactly `length` edges from `from` to `to`
/// that avoid `blocked` and every vertex already marked in `on_path`.
class PathCounter {
public:
    PathCounter(const MultiGraph& g, VertexId to, VertexId blocked)
        : g_(g), to_(to), blocked_(blocked), on_path_(g.vertex_count(), 0), dist_(g.vertex_count()) {
        dist_.grow(g, to, static_cast<int>(g.vertex_count()), blocked);
    }

    std::uint64_t count(VertexId from, std::size_t length, EdgeId skip_edge = UINT32_MAX) {
        on_path_[from] = 1;
        const std::uint64_t c = walk(from, length, skip_edge);
        on_path_[from] = 0;
        return c;
    }

private:
    std::uint64_t walk(VertexId x, std::size_t left, EdgeId skip_edge) {
        if (left == 0) return x == to_ ? 1 : 0;
        std::uint64_t total = 0;
        for (ArcId a : g_.out_arcs(x)) {
            if (edge_of(a) == skip_edge) continue;
            const VertexId y = g_.head(a);
            if (y == blocked_ || on_path_[y]) continue;
            if (dist_[y] == kUnseen || static_cast<std::size_t>(dist_[y]) > left - 1) continue;
            if (y == to_) {
                if (left == 1) ++total;
                continue;
            }
            on_path_[y] = 1;
            total += walk(y, left - 1, skip_edge);
            on_path_[y] = 0;
        }
        return total;
    }

    const MultiGraph& g_;
    VertexId to_;
    VertexId blocked_;
    std::vector<char> on_path_;
    Ball dist_;
};

std::size_t finite_girth(const MultiGraph& g) {
    const Girth gi = girth(g);
    if (!gi.is_finite()) raise(ErrorCode::InfiniteGirth, "graph is a forest");
    return gi.value();
}

void require_edge(const MultiGraph& g, VertexId u, VertexId v) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || u == v || !g.find_edge(u, v)) {
        raise(ErrorCode::NotAnEdge, std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    }
}

std::vector<int> full_distances(const MultiGraph& g, VertexId s) {
    std::vector<int> dist(g.vertex_count(), kUnseen);
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (ArcId a : g.out_arcs(x)) {
            const VertexId y = g.head(a);
            if (dist[y] == kUnseen) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

DistancePartition build_partition(const MultiGraph& g, VertexId source, VertexId anchor, std::optional<VertexId> middle) {
    const Girth gi = girth(g);
    DistancePartition p;
    p.source = source;
    p.anchor = anchor;
    p.middle = middle;
    p.radius = gi.is_finite() ? gi.value() / 2 + 1 : g.vertex_count();
    const auto du = full_distances(g, source);
    const auto dv = full_distances(g, anchor);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (du[x] == kUnseen || dv[x] == kUnseen) continue;
        const auto i = static_cast<std::size_t>(du[x]);
        const auto j = static_cast<std::size_t>(dv[x]);
        if (i <= p.radius && j <= p.radius) p.cells[{i, j}].push_back(x);
    }
    return p;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

std::size_t neighbours_in(const MultiGraph& g, VertexId x, const std::vector<VertexId>& cell) {
    std::size_t count = 0;
    for (ArcId a : g.out_arcs(x)) {
        if (std::binary_search(cell.begin(), cell.end(), g.head(a))) ++count;
    }
    return count;
}

}  // namespace

std::size_t Girth::value() const {
    if (!is_finite()) raise(ErrorCode::InfiniteGirth, "girth is infinite");
    return length_;
}

std::string Girth::to_string() const { return is_finite() ? std::to_string(length_) : "Infinite"; }

Signature::Signature(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
}

std::string Signature::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

Girth girth(const MultiGraph& g) {
    if (g.has_loops()) return Girth::of(1);
    if (g.has_parallel_edges()) return Girth::of(2);
    const std::size_t best = simple_girth(g);
    return best == SIZE_MAX ? Girth::infinite() : Girth::of(best);
}

std::uint64_t epsilon(const MultiGraph& g, EdgeId e) {
    const std::size_t len = finite_girth(g);
    if (e >= g.edge_count()) throw std::out_of_range("edge " + std::to_string(e) + " out of range");
    Ball a(g.vertex_count());
    Ball b(g.vertex_count());
    return epsilon_with(g, len, e, a, b);
}

std::vector<std::uint64_t> epsilon_all(const MultiGraph& g, unsigned threads) {
    const std::size_t len = finite_girth(g);
    const std::size_t m = g.edge_count();
    std::vector<std::uint64_t> eps(m, 0);
    auto work = [&](std::size_t begin, std::size_t step) {
        Ball a(g.vertex_count());
        Ball b(g.vertex_count());
        for (std::size_t e = begin; e < m; e += step) eps[e] = epsilon_with(g, len, static_cast<EdgeId>(e), a, b);
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, m / 64))));
    if (threads == 1) {
        work(0, 1);
        return eps;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    pool.clear();
    return eps;
}

GirthReport girth_report(const MultiGraph& g, unsigned threads) {
    GirthReport r;
    r.girth = finite_girth(g);
    r.epsilon = epsilon_all(g, threads);
    std::uint64_t total = 0;
    for (auto e : r.epsilon) total += e;
    r.cycle_count = total / r.girth;

    r.signatures.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::uint64_t> entries;
        for (ArcId a : g.out_arcs(v)) entries.push_back(r.epsilon[edge_of(a)]);
        r.signatures.emplace_back(std::move(entries));
    }
    if (!r.signatures.empty() &&
        std::all_of(r.signatures.begin(), r.signatures.end(), [&](const Signature& s) { return s == r.signatures.front(); })) {
        r.regular = r.signatures.front();
    }
    return r;
}

nlohmann::json to_json(const GirthReport& report) {
    nlohmann::json eps = nlohmann::json::object();
    for (std::size_t e = 0; e < report.epsilon.size(); ++e) eps[std::to_string(e)] = report.epsilon[e];
    nlohmann::json sigs = nlohmann::json::object();
    for (std::size_t v = 0; v < report.signatures.size(); ++v) sigs[std::to_string(v)] = report.signatures[v].entries();
    return nlohmann::json{{"girth", report.girth},
                          {"cycles", report.cycle_count},
                          {"epsilon", std::move(eps)},
                          {"signatures", std::move(sigs)},
                          {"regular", report.regular ? nlohmann::json(report.regular->entries()) : nlohmann::json()}};
}

std::vector<GirthCycle> girth_cycles(const MultiGraph& g) {
    const std::size_t len = finite_girth(g);
    std::vector<GirthCycle> out;
    if (len == 1) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).is_loop()) out.push_back({{g.edge(e).first}, {e}});
        }
        return out;
    }
    if (len == 2) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            for (ArcId a : g.out_arcs(ed.second)) {
                if (edge_of(a) > e && g.head(a) == ed.first) out.push_back({{ed.first, ed.second}, {e, edge_of(a)}});
            }
        }
        return out;
    }

    // For each edge e = ab, extend b -> ... -> a through edges with larger ids,
    // so each cycle is produced once, from its smallest edge.
    Ball to_start(g.vertex_count());
    std::vector<char> on_path(g.vertex_count(), 0);
    GirthCycle current;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const VertexId a = g.edge(e).first;
        const VertexId b = g.edge(e).second;
        to_start.grow(g, a, static_cast<int>(len));
        current.vertices = {a, b};
        current.edges = {e};
        on_path[a] = on_path[b] = 1;
        auto extend = [&](auto&& self, VertexId x, std::size_t left) -> void {
            for (ArcId arc : g.out_arcs(x)) {
                const EdgeId f = edge_of(arc);
                if (f <= e) continue;
                const VertexId y = g.head(arc);
                if (left == 1) {
                    if (y == a) {
                        current.edges.push_back(f);
                        out.push_back(current);
                        current.edges.pop_back();
                    }
                    continue;
                }
                if (on_path[y] || to_start[y] == kUnseen || static_cast<std::size_t>(to_start[y]) > left - 1) continue;
                on_path[y] = 1;
                current.vertices.push_back(y);
                current.edges.push_back(f);
                self(self, y, left - 1);
                current.vertices.pop_back();
                current.edges.pop_back();
                on_path[y] = 0;
            }
        };
        extend(extend, b, len - 1);
        on_path[a] = on_path[b] = 0;
    }
    return out;
}

TwoPathCounts two_path_counts(const MultiGraph& g, VertexId v) {
    if (!g.is_simple()) raise(ErrorCode::NotSimple, "two-path counts need a simple graph");
    if (v >= g.vertex_count() || g.degree(v) != 3) {
        raise(ErrorCode::NotCubicVertex, "vertex " + std::to_string(v) + " does not have valence 3");
    }
    const std::size_t len = finite_girth(g);

    TwoPathCounts t;
    t.vertex = v;
    std::array<VertexId, 3> ends{};
    {
        const auto arcs = g.out_arcs(v);  // ascending arc id => ascending edge id
        for (std::size_t i = 0; i < 3; ++i) {
            t.edges[i] = edge_of(arcs[i]);
            ends[i] = g.head(arcs[i]);
        }
    }
    Ball a(g.vertex_count());
    Ball b(g.vertex_count());
    for (std::size_t i = 0; i < 3; ++i) t.epsilon[i] = epsilon_with(g, len, t.edges[i], a, b);

    auto closing_paths = [&](VertexId from, VertexId to) {
        PathCounter counter(g, to, v);
        return counter.count(from, len - 2);
    };
    t.x = closing_paths(ends[0], ends[1]);
    t.y = closing_paths(ends[1], ends[2]);
    t.z = closing_paths(ends[2], ends[0]);
    return t;
}

const std::vector<VertexId>& DistancePartition::cell(std::size_t i, std::size_t j) const {
    static const std::vector<VertexId> empty;
    const auto it = cells.find({i, j});
    return it == cells.end() ? empty : it->second;
}

DistancePartition distance_partition(const MultiGraph& g, VertexId u, VertexId v) {
    require_edge(g, u, v);
    return build_partition(g, u, v, std::nullopt);
}

DistancePartition distance_partition(const MultiGraph& g, VertexId u, VertexId v, VertexId w) {
    require_edge(g, u, v);
    require_edge(g, v, w);
    if (u == w) raise(ErrorCode::NotAnEdge, "2-path endpoints coincide");
    return build_partition(g, u, w, v);
}

std::vector<PartitionFact> check_partition_facts(const MultiGraph& g, VertexId u, VertexId v) {
    require_edge(g, u, v);
    const std::size_t len = finite_girth(g);
    const DistancePartition p = build_partition(g, u, v, std::nullopt);
    const std::size_t d = len / 2;
    const bool simple = g.is_simple() && len >= 3;
    const bool regular = g.is_regular();
    const std::uint64_t k = g.max_degree();
    auto cell = [&](std::size_t i, std::size_t j) -> const std::vector<VertexId>& { return p.cell(i, j); };
    std::vector<PartitionFact> facts;

    {
        PartitionFact f{1, simple, true, ""};
        for (std::size_t i = 1; simple && i + 1 <= d; ++i) {
            if (!cell(i, i).empty()) {
                f.holds = false;
                f.witness = "|D^" + std::to_string(i) + "_" + std::to_string(i) + "| = " + std::to_string(cell(i, i).size());
                break;
            }
        }
        facts.push_back(f);
    }
    {
        PartitionFact f{2, simple, true, ""};
        for (std::size_t i = 2; simple && i <= d && f.holds; ++i) {
            for (const auto* c : {&cell(i - 1, i), &cell(i, i - 1)}) {
                for (VertexId x : *c) {
                    if (neighbours_in(g, x, *c) != 0) {
                        f.holds = false;
                        f.witness = "vertex " + std::to_string(x) + " has a neighbour in its own cell at i = " + std::to_string(i);
                        break;
                    }
                }
            }
        }
        facts.push_back(f);
    }
    {
        PartitionFact f{3, simple, true, ""};
        for (std::size_t i = 2; simple && i <= d && f.holds; ++i) {
            // (i-1, i) looks back to (i-2, i-1) and ahead to (i, i+1); mirrored on v's side.
            const std::array<std::array<std::pair<std::size_t, std::size_t>, 3>, 2> sides{{
                {{{i - 1, i}, {i - 2, i - 1}, {i, i + 1}}},
                {{{i, i - 1}, {i - 1, i - 2}, {i + 1, i}}},
            }};
            for (const auto& side : sides) {
                for (VertexId x : cell(side[0].first, side[0].second)) {
                    const std::size_t back = neighbours_in(g, x, cell(side[1].first, side[1].second));
                    const std::size_t ahead = neighbours_in(g, x, cell(side[2].first, side[2].second));
                    const bool ok = back == 1 && (i + 1 > d || ahead == g.degree(x) - 1);
                    if (!ok && f.holds) {
                        f.holds = false;
                        f.witness = "vertex " + std::to_string(x) + " at i = " + std::to_string(i) + ": " + std::to_string(back) +
                                    " back, " + std::to_string(ahead) + " ahead";
                    }
                }
            }
        }
        facts.push_back(f);
    }
    {
        PartitionFact f{4, simple && regular, true, ""};
        for (std::size_t i = 1; f.applicable && i <= d && f.holds; ++i) {
            const std::uint64_t want = ipow(k - 1, i - 1);
            if (cell(i - 1, i).size() != want || cell(i, i - 1).size() != want) {
                f.holds = false;
                f.witness = "i = " + std::to_string(i) + ": sizes " + std::to_string(cell(i - 1, i).size()) + ", " +
                            std::to_string(cell(i, i - 1).size()) + " vs " + std::to_string(want);
            }
        }
        facts.push_back(f);
    }

    std::uint64_t by_paths = 0;
    if (simple) {
        PathCounter counter(g, u, UINT32_MAX);
        by_paths = counter.count(v, len - 1, *g.find_edge(u, v));
    }
    {
        PartitionFact f{5, simple && len % 2 == 0, true, ""};
        if (f.applicable) {
            std::uint64_t across = 0;
            for (VertexId x : cell(d - 1, d)) across += neighbours_in(g, x, cell(d, d - 1));
            f.holds = across == by_paths;
            f.witness = "|E(D^" + std::to_string(d - 1) + "_" + std::to_string(d) + ", D^" + std::to_string(d) + "_" +
                        std::to_string(d - 1) + ")| = " + std::to_string(across) + ", epsilon = " + std::to_string(by_paths);
        }
        facts.push_back(f);
    }
    {
        PartitionFact f{6, simple && len % 2 == 1, true, ""};
        if (f.applicable) {
            const auto& top = cell(d, d);
            for (VertexId y : top) {
                if (neighbours_in(g, y, cell(d - 1, d)) != 1 || neighbours_in(g, y, cell(d, d - 1)) != 1) {
                    f.holds = false;
                    f.witness = "vertex " + std::to_string(y) + " in D^d_d lacks a unique parent on one side";
                    break;
                }
            }
            if (f.holds) {
                f.holds = top.size() == by_paths;
                f.witness = "|D^" + std::to_string(d) + "_" + std::to_string(d) + "| = " + std::to_string(top.size()) +
                            ", epsilon = " + std::to_string(by_paths);
            }
        }
        facts.push_back(f);
    }
    return facts;
}

}  // namespace girthlab
