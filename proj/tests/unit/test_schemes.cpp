#include <doctest.h>

#include <algorithm>
#include <functional>

#include "girthlab/error.hpp"
#include "girthlab/families.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/isomorphism.hpp"
#include "girthlab/multigraph_json.hpp"
#include "girthlab/truncation.hpp"
#include "support/bridge.hpp"
#include "support/corpus.hpp"

using namespace girthlab;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Preconditions;
}

/// n parallel edges between two vertices with matching rotations.
DihedralScheme hosohedron(std::size_t n) {
    std::vector<Edge> edges(n, Edge{0, 1});
    std::vector<std::vector<ArcId>> rot(2);
    for (EdgeId e = 0; e < n; ++e) {
        rot[0].push_back(2 * e);
        rot[1].push_back(2 * e + 1);
    }
    return DihedralScheme(MultiGraph(2, edges), rot);
}

/// One vertex carrying n loops, the two arcs of each loop opposite.
DihedralScheme projective_loops(std::size_t n) {
    std::vector<Edge> edges(n, Edge{0, 0});
    std::vector<ArcId> rot;
    for (EdgeId e = 0; e < n; ++e) rot.push_back(2 * e);
    for (EdgeId e = 0; e < n; ++e) rot.push_back(2 * e + 1);
    return DihedralScheme(MultiGraph(1, edges), {rot});
}

/// Every edge of `h` doubled; at each vertex the two arcs of a doubled pair
/// sit opposite each other in the rotation.
DihedralScheme doubled(const MultiGraph& h) {
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        edges.push_back(e);
        edges.push_back(e);
    }
    MultiGraph g(h.vertex_count(), edges);
    std::vector<std::vector<ArcId>> rot(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        std::vector<ArcId> first;
        std::vector<ArcId> second;
        for (ArcId a : h.out_arcs(v)) {
            const EdgeId e = edge_of(a);
            first.push_back(2 * (2 * e) + (a & 1U));
            second.push_back(2 * (2 * e + 1) + (a & 1U));
        }
        rot[v] = first;
        rot[v].insert(rot[v].end(), second.begin(), second.end());
    }
    return DihedralScheme(g, rot);
}

bool cubic_simple(const MultiGraph& g) { return g.is_simple() && g.min_degree() == 3 && g.max_degree() == 3; }

void check_round_trip(const MultiGraph& g) {
    const Decomposition011 d = decompose_011(g);
    const TruncationResult tr = truncate(d.scheme);
    const auto map = d.truncation_map(tr);
    REQUIRE(is_isomorphism(tr.graph, g, map));
    CHECK(d.cycles.size() == d.lambda().vertex_count());
    CHECK_FALSE(d.lambda().has_loops());
}

}  // namespace

TEST_SUITE("dihedral scheme") {
    TEST_CASE("relation is read off the rotation") {
        const DihedralScheme s = unique_cubic_scheme(complete_graph(4));
        for (VertexId v = 0; v < 4; ++v) {
            const auto rot = s.rotation(v);
            REQUIRE(rot.size() == 3);
            for (ArcId a : rot) {
                const auto [prev, next] = s.neighbours(a);
                CHECK(prev != a);
                CHECK(next != a);
                CHECK(s.related(a, prev));
                CHECK(s.related(next, a));
                CHECK_FALSE(s.related(a, a));
            }
        }
        CHECK_FALSE(s.related(0, 1));
    }

    TEST_CASE("invalid rotations") {
        const MultiGraph k4 = complete_graph(4);
        auto rot = unique_cubic_scheme(k4).rotations();
        auto missing = rot;
        missing[0].pop_back();
        CHECK(code_of([&] { DihedralScheme(k4, missing); }) == ErrorCode::InvalidScheme);
        auto foreign = rot;
        std::swap(foreign[0][0], foreign[1][0]);
        CHECK(code_of([&] { DihedralScheme(k4, foreign); }) == ErrorCode::InvalidScheme);
        auto repeated = rot;
        repeated[0][1] = repeated[0][0];
        CHECK(code_of([&] { DihedralScheme(k4, repeated); }) == ErrorCode::InvalidScheme);
        CHECK(code_of([] { DihedralScheme(cycle_graph(4), {{0, 7}, {1, 2}, {3, 4}, {5, 6}}); }) == ErrorCode::InvalidScheme);
    }

    TEST_CASE("unique cubic scheme needs a cubic graph") {
        CHECK(code_of([] { unique_cubic_scheme(complete_graph(5)); }) == ErrorCode::NotCubic);
        CHECK(code_of([] { unique_cubic_scheme(cycle_graph(5)); }) == ErrorCode::NotCubic);
    }
}

TEST_SUITE("truncation") {
    TEST_CASE("truncated tetrahedron") {
        const TruncationResult tr = truncate(unique_cubic_scheme(complete_graph(4)));
        CHECK(tr.graph.vertex_count() == 12);
        CHECK(tr.graph.edge_count() == 18);
        CHECK(cubic_simple(tr.graph));
        CHECK(girth(tr.graph) == Girth::of(3));
        CHECK(girth_report(tr.graph).regular == Signature({0, 1, 1}));
        CHECK(support::vertex_transitive(tr.graph));
    }

    TEST_CASE("vertex order follows tail, edge, end") {
        const MultiGraph k4 = complete_graph(4);
        const TruncationResult tr = truncate(unique_cubic_scheme(k4));
        REQUIRE(tr.vertex_origin.size() == k4.arc_count());
        for (std::size_t i = 1; i < tr.vertex_origin.size(); ++i) {
            const Arc a = k4.arc(tr.vertex_origin[i - 1]);
            const Arc b = k4.arc(tr.vertex_origin[i]);
            CHECK(std::tie(a.tail, a.edge, a.end) < std::tie(b.tail, b.edge, b.end));
        }
    }

    TEST_CASE("vertex count is the degree sum") {
        for (const MultiGraph& g : {petersen(), heawood(), complete_graph(4), prism(7)}) {
            const TruncationResult tr = truncate(unique_cubic_scheme(g));
            CHECK(tr.graph.vertex_count() == g.arc_count());
            CHECK(cubic_simple(tr.graph));
        }
    }

    TEST_CASE("hosohedra truncate to prisms") {
        for (std::size_t n = 3; n <= 9; ++n) {
            const TruncationResult tr = truncate(hosohedron(n));
            CHECK(are_isomorphic(tr.graph, prism(n)));
        }
    }

    TEST_CASE("antipodal loops truncate to Moebius ladders") {
        for (std::size_t n = 3; n <= 9; ++n) {
            const TruncationResult tr = truncate(projective_loops(n));
            CHECK(are_isomorphic(tr.graph, mobius_ladder(n)));
        }
    }

    TEST_CASE("a loop with consecutive arcs cannot be truncated") {
        const MultiGraph g(1, {{0, 0}, {0, 0}});
        const DihedralScheme s(g, {{0, 1, 2, 3}});
        CHECK(code_of([&] { truncate(s); }) == ErrorCode::InvalidScheme);
    }
}

TEST_SUITE("decompose 011") {
    TEST_CASE("truncated tetrahedron gives back K4") {
        const TruncationResult tr = truncate(unique_cubic_scheme(complete_graph(4)));
        const Decomposition011 d = decompose_011(tr.graph);
        CHECK(are_isomorphic(d.lambda(), complete_graph(4)));
        check_round_trip(tr.graph);
    }

    TEST_CASE("the 3-prism gives two vertices and three parallel edges") {
        const Decomposition011 d = decompose_011(prism(3));
        CHECK(d.lambda().vertex_count() == 2);
        CHECK(d.lambda().edge_count() == 3);
        CHECK(d.lambda().multiplicity(0, 1) == 3);
        check_round_trip(prism(3));
    }

    TEST_CASE("the truncated 3-prism gives back the 3-prism") {
        const TruncationResult tr = truncate(unique_cubic_scheme(prism(3)));
        CHECK(tr.graph.vertex_count() == 18);
        const Decomposition011 d = decompose_011(tr.graph);
        CHECK(are_isomorphic(d.lambda(), prism(3)));
        check_round_trip(tr.graph);
    }

    TEST_CASE("truncations of named cubic graphs round trip") {
        for (const MultiGraph& g : {complete_bipartite(3, 3), petersen(), heawood(), cube_q3(), dodecahedron(), mobius_ladder(5)}) {
            const TruncationResult tr = truncate(unique_cubic_scheme(g));
            REQUIRE(girth_report(tr.graph).regular == Signature({0, 1, 1}));
            const Decomposition011 d = decompose_011(tr.graph);
            CHECK(are_isomorphic(d.lambda(), g));
            check_round_trip(tr.graph);
        }
    }

    TEST_CASE("truncations of Moebius ladders") {
        const TruncationResult tr = truncate(unique_cubic_scheme(mobius_ladder(4)));
        CHECK(tr.graph.vertex_count() == 24);
        check_round_trip(tr.graph);
    }

    TEST_CASE("doubled graphs of large girth recover a girth-2 Lambda") {
        for (const MultiGraph& h : {petersen(), cycle_graph(5), heawood()}) {
            const DihedralScheme s = doubled(h);
            const TruncationResult tr = truncate(s);
            const std::size_t rotation_length = 2 * h.degree(0);
            CHECK(girth(tr.graph) == Girth::of(rotation_length));
            REQUIRE(girth_report(tr.graph).regular == Signature({0, 1, 1}));
            const Decomposition011 d = decompose_011(tr.graph);
            CHECK(girth(d.lambda()) == Girth::of(2));
            CHECK(d.lambda().min_degree() == rotation_length);
            CHECK(d.lambda().max_degree() == rotation_length);
            CHECK(are_isomorphic(d.lambda(), s.base()));
            check_round_trip(tr.graph);
        }
    }

    TEST_CASE("doubled K4 is not signature (0,1,1)") {
        const TruncationResult tr = truncate(doubled(complete_graph(4)));
        CHECK(girth(tr.graph) == Girth::of(6));
        CHECK(girth_report(tr.graph).regular != Signature({0, 1, 1}));
        CHECK_THROWS_AS(decompose_011(tr.graph), Error);
    }

    TEST_CASE("at most two parallel edges outside the 3-prism case") {
        for (const auto& c : support::load_all(20)) {
            const GirthReport r = girth_report(c.graph);
            if (r.regular != Signature({0, 1, 1})) continue;
            const Decomposition011 d = decompose_011(c.graph);
            if (d.lambda().vertex_count() == 2 && d.lambda().edge_count() == 3) continue;
            for (const Edge& e : d.lambda().edges()) CHECK(d.lambda().multiplicity(e.first, e.second) <= 2);
        }
    }

    TEST_CASE("every corpus graph with signature (0,1,1) round trips") {
        std::size_t hits = 0;
        for (const auto& c : support::load_all(20)) {
            if (girth_report(c.graph).regular != Signature({0, 1, 1})) continue;
            INFO(c.id);
            check_round_trip(c.graph);
            ++hits;
        }
        CHECK(hits > 0);
    }

    TEST_CASE("rejected inputs") {
        CHECK(code_of([] { decompose_011(complete_graph(4)); }) == ErrorCode::WrongSignature);
        CHECK(code_of([] { decompose_011(MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})); }) == ErrorCode::NotSimple);
        const auto corpus = support::load_corpus("cubic_connected_n04-n14.g6");
        const auto irregular = std::find_if(corpus.begin(), corpus.end(),
                                            [](const auto& c) { return !girth_report(c.graph).regular; });
        REQUIRE(irregular != corpus.end());
        CHECK(code_of([&] { decompose_011(irregular->graph); }) == ErrorCode::NotGirthRegular);
    }

    TEST_CASE("witness json") {
        const Decomposition011 d = decompose_011(prism(3));
        const auto j = to_json(d);
        CHECK(j["mode"] == "011");
        const GraphDocument back = read_multigraph_json(j["lambda"]);
        REQUIRE(back.scheme);
        CHECK(back.scheme->rotations() == d.scheme.rotations());
        CHECK(j["girthCycles"].size() == 2);
    }
}
