#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "girthlab/multigraph.hpp"

namespace girthlab {

/// Length of a shortest cycle, or infinite for forests.
class Girth {
public:
    static Girth infinite() noexcept { return Girth{}; }
    static Girth of(std::size_t length) noexcept { return Girth{length}; }

    bool is_finite() const noexcept { return length_ != 0; }
    /// Throws InfiniteGirth.
    std::size_t value() const;

    std::string to_string() const;
    friend bool operator==(const Girth&, const Girth&) = default;

private:
    Girth() = default;
    explicit Girth(std::size_t length) : length_(length) {}
    std::size_t length_ = 0;
};

/// Non-descending tuple of girth-cycle counts over the edges at a vertex.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<std::uint64_t> entries);

    const std::vector<std::uint64_t>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::uint64_t operator[](std::size_t i) const { return entries_.at(i); }

    std::string to_string() const;  // "(a1,a2,...)"
    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    std::vector<std::uint64_t> entries_;
};

struct GirthReport {
    std::size_t girth = 0;
    std::uint64_t cycle_count = 0;
    std::vector<std::uint64_t> epsilon;  // by edge id
    std::vector<Signature> signatures;   // by vertex id
    std::optional<Signature> regular;    // present iff all signatures agree
};

/// A girth cycle as a closed vertex sequence; `edges[i]` joins `vertices[i]`
/// and `vertices[(i + 1) % length]`.
struct GirthCycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

/// Loop => 1; parallel pair => 2; otherwise the shortest simple cycle.
Girth girth(const MultiGraph& g);

/// Number of distinct girth cycles (as edge sets) through `e`, counted from
/// the distance partition around `e`. Throws InfiniteGirth.
std::uint64_t epsilon(const MultiGraph& g, EdgeId e);

/// Epsilon for every edge; `threads > 1` splits the edges over workers and
/// yields the same result as a single thread.
std::vector<std::uint64_t> epsilon_all(const MultiGraph& g, unsigned threads = 1);

/// Throws InfiniteGirth.
GirthReport girth_report(const MultiGraph& g, unsigned threads = 1);

nlohmann::json to_json(const GirthReport& report);

/// Every girth cycle of `g`, each listed once, starting with the smallest
/// edge id it contains. Throws InfiniteGirth.
std::vector<GirthCycle> girth_cycles(const MultiGraph& g);

/// Girth cycles through a cubic vertex split by the 2-paths they use.
/// Incident edges are taken in ascending id order e1 < e2 < e3; x, y, z
/// count the girth cycles through e1e2, e2e3 and e3e1.
struct TwoPathCounts {
    VertexId vertex = 0;
    std::array<EdgeId, 3> edges{};
    std::array<std::uint64_t, 3> epsilon{};  // a, b, c in edge order
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t z = 0;

    /// a = x + z, b = x + y, c = y + z.
    bool consistent() const noexcept {
        return epsilon[0] == x + z && epsilon[1] == x + y && epsilon[2] == y + z;
    }
};

/// Counts by direct enumeration of paths closing each 2-path into a girth
/// cycle. Throws NotSimple, NotCubicVertex or InfiniteGirth.
TwoPathCounts two_path_counts(const MultiGraph& g, VertexId v);

/// Cells D^i_j = S_i(source) ∩ S_j(anchor) for i, j <= radius, where the
/// radius is floor(girth / 2) + 1 (or n for forests).
struct DistancePartition {
    VertexId source = 0;
    VertexId anchor = 0;
    std::optional<VertexId> middle;  // set for the 2-path variant
    std::size_t radius = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<VertexId>> cells;

    const std::vector<VertexId>& cell(std::size_t i, std::size_t j) const;
};

/// Throws NotAnEdge when uv is not an edge.
DistancePartition distance_partition(const MultiGraph& g, VertexId u, VertexId v);

/// Partition around the 2-path u-v-w (distances from u and w).
/// Throws NotAnEdge when u-v-w is not a 2-path with u != w.
DistancePartition distance_partition(const MultiGraph& g, VertexId u, VertexId v, VertexId w);

struct PartitionFact {
    int id = 0;  // 1..6; fact 3 covers both the u-side and v-side statements
    bool applicable = false;
    bool holds = false;
    std::string witness;
};

/// Evaluates the six structural facts about the distance partition around
/// the edge uv of a simple graph of finite girth g (d = floor(g/2)).
/// Throws NotAnEdge, InfiniteGirth.
std::vector<PartitionFact> check_partition_facts(const MultiGraph& g, VertexId u, VertexId v);

}  // namespace girthlab
