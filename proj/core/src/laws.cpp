#include "girthlab/laws.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "girthlab/error.hpp"
#include "girthlab/families.hpp"
#include "girthlab/maps.hpp"

namespace girthlab {
namespace {

using nlohmann::json;

/// (k-1)^d, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) return UINT64_MAX;
    }
    return r;
}

LawResult skipped(std::string id) { return LawResult{std::move(id), false, std::nullopt, json()}; }

LawResult verdict(std::string id, bool holds, json witness) {
    return LawResult{std::move(id), true, holds, holds ? json() : std::move(witness)};
}

LawResult failed(std::string id, json witness, const char* key, json why) {
    witness[key] = std::move(why);
    return verdict(std::move(id), false, std::move(witness));
}

struct Facts {
    const MultiGraph& g;
    const GirthReport& report;
    std::size_t n;
    std::size_t k;
    std::size_t d;
    bool simple;
    bool regular;
    bool cubic;
    bool girth_regular;
    std::uint64_t a = 0;  // signature entries when cubic and girth-regular
    std::uint64_t b = 0;
    std::uint64_t c = 0;

    Facts(const MultiGraph& graph, const GirthReport& r)
        : g(graph),
          report(r),
          n(graph.vertex_count()),
          k(graph.max_degree()),
          d(r.girth / 2),
          simple(graph.is_simple()),
          regular(graph.is_regular()),
          cubic(simple && regular && k == 3),
          girth_regular(r.regular.has_value()) {
        if (cubic && girth_regular) {
            a = (*r.regular)[0];
            b = (*r.regular)[1];
            c = (*r.regular)[2];
        }
    }

    bool cubic_gr() const noexcept { return cubic && girth_regular; }
    bool has_signature(std::array<std::uint64_t, 3> s) const noexcept {
        return cubic_gr() && a == s[0] && b == s[1] && c == s[2];
    }
    json signature_json() const { return girth_regular ? json(report.regular->entries()) : json(); }
};

LawResult thm1(const Facts& f) {
    if (!f.simple || !f.regular || f.k < 2) return skipped("thm1");
    const std::uint64_t bound = saturating_pow(f.k - 1, f.d);
    for (EdgeId e = 0; e < f.report.epsilon.size(); ++e) {
        if (f.report.epsilon[e] > bound) {
            return verdict("thm1", false,
                           json{{"edge", e}, {"epsilon", f.report.epsilon[e]}, {"bound", bound}, {"k", f.k}, {"girth", f.report.girth}});
        }
    }
    return verdict("thm1", true, {});
}

LawResult thm2(const Facts& f, std::size_t cap) {
    if (!f.simple || !f.regular || !f.girth_regular || f.k < 2 || f.report.girth % 2 != 0) return skipped("thm2");
    const std::uint64_t bound = saturating_pow(f.k - 1, f.d);
    const auto& sig = f.report.regular->entries();
    if (sig.back() != bound) return skipped("thm2");

    json w{{"signature", f.signature_json()}, {"girth", f.report.girth}, {"k", f.k}, {"vertices", f.n}};
    if (sig.front() != sig.back()) return verdict("thm2", false, w);
    const std::uint64_t moore = moore_bound(f.k, f.report.girth);
    if (f.n != moore) {
        w["mooreBound"] = moore;
        return verdict("thm2", false, w);
    }
    if (f.k != 3) return verdict("thm2", true, {});

    std::function<MultiGraph()> named;
    switch (f.report.girth) {
        case 4: named = [] { return complete_bipartite(3, 3); }; break;
        case 6: named = heawood; break;
        case 8: named = tutte_coxeter; break;
        case 12: named = tutte_12_cage; break;
        default: w["reason"] = "cubic girth outside {4,6,8,12}"; return verdict("thm2", false, w);
    }
    if (f.n > cap) return skipped("thm2");
    if (!find_isomorphism(f.g, named(), cap)) {
        w["reason"] = "not isomorphic to the named graph of this girth";
        return verdict("thm2", false, w);
    }
    return verdict("thm2", true, {});
}

LawResult thm3(const Facts& f, std::size_t cap) {
    if (!f.cubic_gr() || f.report.girth % 2 == 0 || f.c != (std::uint64_t{1} << f.d)) return skipped("thm3");
    json w{{"signature", f.signature_json()}, {"girth", f.report.girth}, {"vertices", f.n}};
    MultiGraph named;
    if (f.report.girth == 3) {
        named = complete_graph(4);
    } else if (f.report.girth == 5) {
        named = petersen();
    } else {
        w["reason"] = "girth is neither 3 nor 5";
        return verdict("thm3", false, w);
    }
    if (f.n > cap) return skipped("thm3");
    return verdict("thm3", find_isomorphism(f.g, named, cap).has_value(), w);
}

LawResult lem31(const Facts& f) {
    if (!f.cubic_gr()) return skipped("lem3.1");
    json w{{"signature", f.signature_json()}, {"girth", f.report.girth}};
    if ((f.a + f.b + f.c) % 2 != 0) return failed("lem3.1", w, "part", 1);
    if (f.a + f.b < f.c) return failed("lem3.1", w, "part", 2);
    if (f.a >= 1 && f.c == f.a + f.b && f.report.girth % 2 != 0) return failed("lem3.1", w, "part", 3);
    for (VertexId v = 0; v < f.n; ++v) {
        const TwoPathCounts t = two_path_counts(f.g, v);
        if (!t.consistent()) {
            w["part"] = "two-path counts";
            w["vertex"] = v;
            w["edges"] = t.edges;
            w["epsilon"] = t.epsilon;
            w["xyz"] = {t.x, t.y, t.z};
            return verdict("lem3.1", false, w);
        }
    }
    return verdict("lem3.1", true, {});
}

LawResult lem32(const Facts& f) {
    if (!f.cubic_gr() || f.a != 0) return skipped("lem3.2");
    return verdict("lem3.2", f.b == 1 && f.c == 1, json{{"signature", f.signature_json()}});
}

LawResult cor33(const Facts& f) {
    if (!f.cubic_gr() || f.report.girth % 2 == 0) return skipped("cor3.3");
    return verdict("cor3.3", f.a != 1, json{{"signature", f.signature_json()}, {"girth", f.report.girth}});
}

LawResult lem34(const Facts& f) {
    if (!f.cubic_gr()) return skipped("lem3.4");
    const auto m = static_cast<std::int64_t>(saturating_pow(2, f.d - 1));
    const auto a = static_cast<std::int64_t>(f.a);
    const auto b = static_cast<std::int64_t>(f.b);
    const auto c = static_cast<std::int64_t>(f.c);
    return verdict("lem3.4", a >= c - m && b <= a - c + 2 * m,
                   json{{"signature", f.signature_json()}, {"girth", f.report.girth}, {"m", m}});
}

LawResult thm36(const Facts& f) {
    if (!f.has_signature({0, 1, 1})) return skipped("thm3.6");
    const Decomposition011 dec = decompose_011(f.g);
    const MultiGraph& lambda = dec.lambda();
    json w{{"lambdaVertices", lambda.vertex_count()}, {"lambdaEdges", lambda.edge_count()}};
    if (lambda.has_loops()) return failed("thm3.6", w, "reason", "lambda has a loop");
    if (!lambda.is_regular() || lambda.max_degree() != f.report.girth) {
        return failed("thm3.6", w, "reason", "lambda is not g-regular");
    }
    const TruncationResult tr = truncate(dec.scheme);
    if (!is_isomorphism(tr.graph, f.g, dec.truncation_map(tr))) {
        return failed("thm3.6", w, "reason", "truncation does not map onto the input");
    }
    return verdict("thm3.6", true, {});
}

LawResult thm39(const Facts& f) {
    if (!f.has_signature({2, 2, 2}) || !f.g.is_connected()) return skipped("thm3.9");
    const auto n = static_cast<std::int64_t>(f.n);
    const auto gl = static_cast<std::int64_t>(f.report.girth);
    json w{{"vertices", n}, {"girth", gl}};
    if ((3 * n) % gl != 0) return failed("thm3.9", w, "reason", "girth does not divide 3n");
    try {
        const MapComplex m = build_map(f.g, girth_cycle_walks(f.g));
        w["chi"] = m.euler_characteristic();
        return verdict("thm3.9", 2 * gl * m.euler_characteristic() == n * (6 - gl), w);
    } catch (const Error& e) {
        w["reason"] = e.what();
        return verdict("thm3.9", false, w);
    }
}

LawResult cor310(const Facts& f) {
    if (!f.has_signature({2, 2, 2}) || f.report.girth > 5) return skipped("cor3.10");
    return verdict("cor3.10", f.n <= 20, json{{"vertices", f.n}, {"girth", f.report.girth}});
}

LawResult thm311(const Facts& f) {
    if (!f.has_signature({1, 1, 2}) || !f.g.is_connected()) return skipped("thm3.11");
    json w{{"vertices", f.n}, {"girth", f.report.girth}};
    if (f.report.girth % 2 != 0) return failed("thm3.11", w, "reason", "odd girth");
    if (f.n % (f.report.girth / 2) != 0) return failed("thm3.11", w, "reason", "g/2 does not divide n");
    try {
        const Decomposition112 dec = decompose_112(f.g);
        for (const auto& face : dec.map.faces()) {
            if (face.length() * 2 != f.report.girth) return failed("thm3.11", w, "reason", "face of wrong length");
        }
        const TruncationResult tr = truncate_map(dec.map);
        if (!is_isomorphism(tr.graph, f.g, dec.truncation_map(tr))) {
            return failed("thm3.11", w, "reason", "truncation does not map onto the input");
        }
    } catch (const Error& e) {
        w["reason"] = e.what();
        return verdict("thm3.11", false, w);
    }
    return verdict("thm3.11", true, {});
}

LawResult thm_main(const Facts& f, std::size_t cap) {
    if (!f.cubic_gr() || f.report.girth > 5) return skipped("thm-main");
    try {
        const Classification c = classify_g5(f.g, cap);
        return verdict("thm-main", c.kind != ClassCase::OutsideTheorem,
                       json{{"signature", f.signature_json()}, {"girth", f.report.girth}, {"detail", c.detail}});
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SizeCapExceeded) return skipped("thm-main");
        throw;
    }
}

bool is_graph(const MultiGraph& g, const MultiGraph& h, std::size_t cap, std::vector<VertexId>& map) {
    auto found = find_isomorphism(g, h, cap);
    if (!found) return false;
    map = std::move(*found);
    return true;
}

}  // namespace

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids{"thm1",   "thm2",   "thm3",    "lem3.1",  "lem3.2",  "cor3.3",
                                              "lem3.4", "thm3.6", "thm3.9", "cor3.10", "thm3.11", "thm-main"};
    return ids;
}

std::vector<LawResult> check_all_laws(const MultiGraph& g, std::size_t iso_cap) {
    if (!g.is_connected()) raise(ErrorCode::Disconnected, "laws are stated for connected graphs");
    return check_all_laws(g, girth_report(g), iso_cap);
}

std::vector<LawResult> check_all_laws(const MultiGraph& g, const GirthReport& report, std::size_t iso_cap) {
    if (!g.is_connected()) raise(ErrorCode::Disconnected, "laws are stated for connected graphs");
    const Facts f(g, report);
    return {thm1(f),  thm2(f, iso_cap), thm3(f, iso_cap), lem31(f),  lem32(f),   cor33(f),
            lem34(f), thm36(f),         thm39(f),         cor310(f), thm311(f), thm_main(f, iso_cap)};
}

json to_json(const LawResult& r) {
    json out{{"law", r.id}, {"applicable", r.applicable}};
    out["holds"] = r.holds ? json(*r.holds) : json();
    if (!r.witness.is_null()) out["witness"] = r.witness;
    return out;
}

std::string_view to_string(ClassCase c) noexcept {
    switch (c) {
        case ClassCase::Trunc011: return "Trunc011";
        case ClassCase::K4: return "K4";
        case ClassCase::PrismOrMobius: return "PrismOrMobius";
        case ClassCase::K33: return "K33";
        case ClassCase::Q3: return "Q3";
        case ClassCase::Petersen: return "Petersen";
        case ClassCase::Dodecahedron: return "Dodecahedron";
        case ClassCase::OutsideTheorem: return "OutsideTheorem";
    }
    return "OutsideTheorem";
}

MultiGraph Classification::canonical_graph() const {
    switch (kind) {
        case ClassCase::Trunc011: return witness ? truncate(witness->scheme).graph : MultiGraph();
        case ClassCase::K4: return complete_graph(4);
        case ClassCase::PrismOrMobius: return family == "mobius" ? mobius_ladder(n) : prism(n);
        case ClassCase::K33: return complete_bipartite(3, 3);
        case ClassCase::Q3: return cube_q3();
        case ClassCase::Petersen: return petersen();
        case ClassCase::Dodecahedron: return dodecahedron();
        case ClassCase::OutsideTheorem: break;
    }
    return MultiGraph();
}

Classification classify_g5(const MultiGraph& g, std::size_t iso_cap) {
    if (!g.is_simple()) raise(ErrorCode::Preconditions, "graph is not simple");
    if (!g.is_connected()) raise(ErrorCode::Preconditions, "graph is not connected");
    if (g.vertex_count() == 0 || !g.is_regular() || g.max_degree() != 3) raise(ErrorCode::Preconditions, "graph is not cubic");
    const GirthReport report = girth_report(g);
    if (!report.regular) raise(ErrorCode::Preconditions, "graph is not girth-regular");
    if (report.girth > 5) raise(ErrorCode::Preconditions, "girth " + std::to_string(report.girth) + " exceeds 5");

    Classification out;
    out.girth = report.girth;
    out.signature = *report.regular;
    const auto& s = out.signature.entries();
    const std::array<std::uint64_t, 3> sig{s[0], s[1], s[2]};
    using S = std::array<std::uint64_t, 3>;

    auto confirm = [&](ClassCase kind, const MultiGraph& named) {
        if (is_graph(g, named, iso_cap, out.isomorphism)) {
            out.kind = kind;
        } else {
            out.detail = std::string("signature matches ") + std::string(to_string(kind)) + " but the graph is not isomorphic to it";
        }
    };

    if (sig == S{0, 1, 1}) {
        Decomposition011 dec = decompose_011(g);
        const TruncationResult tr = truncate(dec.scheme);
        const auto back = dec.truncation_map(tr);  // truncation vertex -> input vertex
        if (is_isomorphism(tr.graph, g, back)) {
            out.kind = ClassCase::Trunc011;
            out.isomorphism.assign(back.size(), 0);
            for (VertexId t = 0; t < back.size(); ++t) out.isomorphism[back[t]] = t;
            out.detail = "truncation of a " + std::to_string(report.girth) + "-regular graph on " +
                         std::to_string(dec.lambda().vertex_count()) + " vertices";
        } else {
            out.detail = "decomposition does not truncate back to the input";
        }
        out.witness = std::move(dec);
        return out;
    }
    if (report.girth == 3 && sig == S{2, 2, 2}) {
        confirm(ClassCase::K4, complete_graph(4));
    } else if (report.girth == 4 && sig == S{4, 4, 4}) {
        confirm(ClassCase::K33, complete_bipartite(3, 3));
    } else if (report.girth == 4 && sig == S{2, 2, 2}) {
        confirm(ClassCase::Q3, cube_q3());
    } else if (report.girth == 4 && sig == S{1, 1, 2}) {
        out.n = g.vertex_count() / 2;
        if (out.n >= 3 && is_graph(g, prism(out.n), iso_cap, out.isomorphism)) {
            out.kind = ClassCase::PrismOrMobius;
            out.family = "prism";
        } else if (out.n >= 3 && is_graph(g, mobius_ladder(out.n), iso_cap, out.isomorphism)) {
            out.kind = ClassCase::PrismOrMobius;
            out.family = "mobius";
        } else {
            out.detail = "signature (1,1,2) at girth 4 but neither a prism nor a Mobius ladder";
        }
    } else if (report.girth == 5 && sig == S{4, 4, 4}) {
        confirm(ClassCase::Petersen, petersen());
    } else if (report.girth == 5 && sig == S{2, 2, 2}) {
        confirm(ClassCase::Dodecahedron, dodecahedron());
    } else {
        out.detail = "no case for girth " + std::to_string(report.girth) + " with signature " + out.signature.to_string();
    }
    return out;
}

json to_json(const Classification& c) {
    json out{{"case", std::string(to_string(c.kind))}, {"girth", c.girth}, {"signature", c.signature.entries()}};
    if (c.kind == ClassCase::PrismOrMobius) {
        out["family"] = c.family;
        out["n"] = c.n;
    }
    if (!c.isomorphism.empty()) out["isomorphism"] = c.isomorphism;
    if (c.witness) out["witness"] = to_json(*c.witness);
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

}  // namespace girthlab
