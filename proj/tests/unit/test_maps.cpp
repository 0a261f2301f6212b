#include <doctest.h>

#include <algorithm>
#include <functional>

#include "girthlab/error.hpp"
#include "girthlab/families.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/isomorphism.hpp"
#include "girthlab/maps.hpp"
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

/// One vertex, four loops, four 2-gonal faces on the projective plane.
MapComplex fig4_map() {
    const MultiGraph g(1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
    std::vector<ClosedWalk> faces;
    for (const auto& arcs : std::vector<std::vector<ArcId>>{{1, 2}, {3, 4}, {5, 6}, {7, 1}}) faces.emplace_back(g, arcs);
    return build_map(g, faces);
}

/// Two vertices, n parallel edges, n 2-gonal faces.
MapComplex hosohedron_map(std::size_t n) {
    const MultiGraph g(2, std::vector<Edge>(n, Edge{0, 1}));
    std::vector<ClosedWalk> faces;
    for (EdgeId e = 0; e < n; ++e) {
        const EdgeId f = static_cast<EdgeId>((e + 1) % n);
        faces.emplace_back(g, std::vector<ArcId>{2 * e, 2 * f + 1});
    }
    return build_map(g, faces);
}

std::optional<Signature> regular_signature(const MultiGraph& g) { return girth_report(g).regular; }

}  // namespace

TEST_SUITE("closed walks") {
    TEST_CASE("rotations and reversals normalise to the same walk") {
        const MultiGraph g = complete_graph(4);
        const auto arc = [&](VertexId u, VertexId v) {
            const EdgeId e = *g.find_edge(u, v);
            return static_cast<ArcId>(2 * e + (g.edge(e).first == u ? 0 : 1));
        };
        const ArcId a01 = arc(0, 1);
        const ArcId a12 = arc(1, 2);
        const ArcId a20 = arc(2, 0);
        const ClosedWalk w(g, {a01, a12, a20});
        CHECK(ClosedWalk(g, {a12, a20, a01}) == w);
        CHECK(ClosedWalk(g, {inverse(a20), inverse(a12), inverse(a01)}) == w);
        CHECK(w.length() == 3);
        CHECK(*std::min_element(w.arcs().begin(), w.arcs().end()) == w.arcs().front());
    }

    TEST_CASE("malformed walks") {
        const MultiGraph g = complete_graph(4);
        CHECK(code_of([&] { ClosedWalk(g, {}); }) == ErrorCode::SchemaViolation);
        CHECK(code_of([&] { ClosedWalk(g, {0, 2}); }) == ErrorCode::SchemaViolation);
        CHECK(code_of([&] { ClosedWalk(g, {0, 1}); }) == ErrorCode::SchemaViolation);
        CHECK(code_of([&] { ClosedWalk(g, {0, 99}); }) == ErrorCode::SchemaViolation);
    }
}

TEST_SUITE("map complex") {
    TEST_CASE("tetrahedron") {
        const MapComplex m = build_map(complete_graph(4), girth_cycle_walks(complete_graph(4)));
        CHECK(m.faces().size() == 4);
        CHECK(m.euler_characteristic() == 2);
        CHECK_FALSE(m.non_orientable_forced());
        const TruncationResult tr = truncate_map(m);
        CHECK(tr.graph.vertex_count() == 12);
        CHECK(girth(tr.graph) == Girth::of(3));
    }

    TEST_CASE("dodecahedron") {
        const MapComplex m = build_map(dodecahedron(), girth_cycle_walks(dodecahedron()));
        CHECK(m.faces().size() == 12);
        CHECK(m.euler_characteristic() == 2);
    }

    TEST_CASE("projective {2,8}-map") {
        const MapComplex m = fig4_map();
        CHECK(m.skeleton().vertex_count() == 1);
        CHECK(m.skeleton().edge_count() == 4);
        CHECK(m.faces().size() == 4);
        CHECK(m.euler_characteristic() == 1);
        CHECK(m.non_orientable_forced());
        CHECK(m.scheme().rotation(0).size() == 8);
        const TruncationResult tr = truncate_map(m);
        CHECK(are_isomorphic(tr.graph, mobius_ladder(4)));
        CHECK(regular_signature(tr.graph) == Signature({1, 1, 2}));
    }

    TEST_CASE("hosohedra") {
        for (std::size_t n = 3; n <= 8; ++n) {
            const MapComplex m = hosohedron_map(n);
            CHECK(m.euler_characteristic() == 2);
            CHECK(are_isomorphic(truncate_map(m).graph, prism(n)));
        }
    }

    TEST_CASE("face lengths sum to twice the edges") {
        for (const MapComplex& m : {fig4_map(), hosohedron_map(5), map_from_222(cube_q3())}) {
            std::size_t total = 0;
            for (const auto& f : m.faces()) total += f.length();
            CHECK(total == 2 * m.skeleton().edge_count());
            CHECK(m.euler_characteristic() <= 2);
        }
    }

    TEST_CASE("coverage, connectivity and dihedrality") {
        const MultiGraph k4 = complete_graph(4);
        auto three = girth_cycle_walks(k4);
        three.pop_back();
        CHECK(code_of([&] { build_map(k4, three); }) == ErrorCode::EdgeCoverageViolation);

        const MultiGraph two_triangles = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        auto walks = girth_cycle_walks(two_triangles);
        const auto doubled_walks = [](std::vector<ClosedWalk> w) {
            const auto copy = w;
            w.insert(w.end(), copy.begin(), copy.end());
            return w;
        };
        CHECK(code_of([&] { build_map(two_triangles, doubled_walks(walks)); }) == ErrorCode::Disconnected);

        // Two triangles sharing vertex 0: the arcs at 0 split into two rotation cycles.
        const MultiGraph bowtie = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
        CHECK(code_of([&] { build_map(bowtie, doubled_walks(girth_cycle_walks(bowtie))); }) == ErrorCode::NotDihedral);
    }

    TEST_CASE("json round trip") {
        const MapComplex m = fig4_map();
        const auto j = to_json(m);
        CHECK(j["chi"] == 1);
        CHECK(j["nonOrientableForced"] == true);
        const MapComplex back = read_map_json(j);
        CHECK(back.faces() == m.faces());
        CHECK(back.scheme().rotations() == m.scheme().rotations());
        CHECK(code_of([] { read_map_json(nlohmann::json::object()); }) == ErrorCode::SchemaViolation);
    }
}

TEST_SUITE("signature (2,2,2)") {
    TEST_CASE("spherical examples") {
        for (const MultiGraph& g : {complete_graph(4), cube_q3(), dodecahedron()}) {
            const MapComplex m = map_from_222(g);
            CHECK(m.euler_characteristic() == 2);
            CHECK(m.faces().size() == girth_report(g).cycle_count);
            CHECK(are_isomorphic(m.skeleton(), g));
        }
    }

    TEST_CASE("Euler characteristic identity over the corpus") {
        std::size_t hits = 0;
        for (const auto& c : support::load_all(20)) {
            if (regular_signature(c.graph) != Signature({2, 2, 2})) continue;
            const MapComplex m = map_from_222(c.graph);
            const auto n = static_cast<std::int64_t>(c.graph.vertex_count());
            const auto g = static_cast<std::int64_t>(girth(c.graph).value());
            CHECK((3 * n) % g == 0);
            CHECK(2 * g * m.euler_characteristic() == n * (6 - g));
            CHECK(c.graph.vertex_count() <= 20);
            ++hits;
        }
        CHECK(hits > 0);
    }

    TEST_CASE("rejected inputs") {
        CHECK(code_of([] { map_from_222(petersen()); }) == ErrorCode::WrongSignature);
        CHECK(code_of([] { map_from_222(MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})); }) == ErrorCode::NotSimple);
    }
}

TEST_SUITE("signature (1,1,2)") {
    TEST_CASE("Moebius ladder M4") {
        const Decomposition112 d = decompose_112(mobius_ladder(4));
        CHECK(d.map.skeleton().vertex_count() == 1);
        CHECK(d.map.skeleton().edge_count() == 4);
        CHECK(d.map.euler_characteristic() == 1);
        CHECK(d.map.non_orientable_forced());
        for (const auto& f : d.map.faces()) CHECK(f.length() == 2);
    }

    TEST_CASE("prisms") {
        for (std::size_t n : {5U, 6U}) {
            const Decomposition112 d = decompose_112(prism(n));
            CHECK(d.map.skeleton().vertex_count() == 2);
            CHECK(d.map.skeleton().edge_count() == n);
            CHECK(d.map.euler_characteristic() == 2);
        }
    }

    TEST_CASE("colouring invariants and round trips over ladders and the corpus") {
        std::vector<MultiGraph> graphs;
        for (std::size_t n = 5; n <= 12; ++n) graphs.push_back(prism(n));
        for (std::size_t n = 4; n <= 12; ++n) graphs.push_back(mobius_ladder(n));
        for (const auto& c : support::load_all(20)) {
            if (regular_signature(c.graph) == Signature({1, 1, 2})) graphs.push_back(c.graph);
        }
        for (const MultiGraph& g : graphs) {
            const Decomposition112 d = decompose_112(g);
            const std::size_t len = girth(g).value();
            CHECK(static_cast<std::size_t>(std::count(d.in_y.begin(), d.in_y.end(), 1)) == g.vertex_count() / 2);
            for (const auto& c : girth_cycles(g)) {
                for (std::size_t i = 0; i < len; ++i) CHECK(d.in_y[c.edges[i]] != d.in_y[c.edges[(i + 1) % len]]);
            }
            for (const auto& f : d.map.faces()) CHECK(f.length() == len / 2);
            CHECK(g.vertex_count() % (len / 2) == 0);
            const TruncationResult tr = truncate_map(d.map);
            REQUIRE(is_isomorphism(tr.graph, g, d.truncation_map(tr)));
        }
    }

    TEST_CASE("rejected inputs") {
        CHECK(code_of([] { decompose_112(complete_graph(4)); }) == ErrorCode::WrongSignature);
        CHECK(code_of([] { decompose_112(MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})); }) == ErrorCode::NotSimple);
    }

    TEST_CASE("witness json") {
        const auto j = to_json(decompose_112(prism(5)));
        CHECK(j["mode"] == "112");
        CHECK(j["edgeColouring"].get<std::string>().size() == 15);
        CHECK(j["map"]["chi"] == 2);
        const MapComplex back = read_map_json(j["map"]);
        CHECK(back.skeleton().edge_count() == 5);
    }
}
