#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "girthlab/girthlab.hpp"
#include "oracle/oracle.hpp"
#include "support/bridge.hpp"
#include "support/corpus.hpp"

using namespace girthlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

/// Collects the first few failures of one criterion.
class Outcome {
public:
    void fail(const std::string& what) {
        ++failures_;
        if (failures_ <= 5) notes_ << (failures_ > 1 ? "; " : "") << what;
    }
    bool ok() const { return failures_ == 0; }
    std::string notes() const { return notes_.str(); }
    std::size_t failures() const { return failures_; }

private:
    std::size_t failures_ = 0;
    std::ostringstream notes_;
};

std::optional<Signature> regular_signature(const MultiGraph& g) { return girth_report(g).regular; }

Signature sig3(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return Signature({a, b, c}); }

std::string show(const std::optional<Signature>& s) { return s ? s->to_string() : "irregular"; }

void criterion1(Outcome& out, std::string& info) {
    struct Row {
        std::string name;
        MultiGraph g;
        std::size_t girth;
        Signature sig;
    };
    std::vector<Row> rows{{"K4", complete_graph(4), 3, sig3(2, 2, 2)},
                          {"K33", complete_bipartite(3, 3), 4, sig3(4, 4, 4)},
                          {"Q3", cube_q3(), 4, sig3(2, 2, 2)},
                          {"Petersen", petersen(), 5, sig3(4, 4, 4)},
                          {"dodecahedron", dodecahedron(), 5, sig3(2, 2, 2)}};
    for (std::size_t n = 5; n <= 12; ++n) rows.push_back({"Y" + std::to_string(n), prism(n), 4, sig3(1, 1, 2)});
    for (std::size_t n = 4; n <= 12; ++n) rows.push_back({"M" + std::to_string(n), mobius_ladder(n), 4, sig3(1, 1, 2)});
    double slowest = 0;
    for (const auto& r : rows) {
        const auto start = Clock::now();
        const GirthReport rep = girth_report(r.g);
        const double t = seconds_since(start);
        slowest = std::max(slowest, t);
        if (rep.girth != r.girth) out.fail(r.name + " girth " + std::to_string(rep.girth));
        if (rep.regular != r.sig) out.fail(r.name + " signature " + show(rep.regular));
        if (t >= 1.0) out.fail(r.name + " took " + std::to_string(t) + " s");
    }
    info = std::to_string(rows.size()) + " graphs, slowest " + std::to_string(slowest) + " s";
}

void criterion2(Outcome& out, std::string& info) {
    struct Row {
        std::string name;
        MultiGraph g;
        Signature sig;
    };
    const std::vector<Row> rows{{"Heawood", heawood(), sig3(8, 8, 8)},
                                {"Tutte-Coxeter", tutte_coxeter(), sig3(16, 16, 16)},
                                {"Tutte 12-cage", tutte_12_cage(), sig3(64, 64, 64)}};
    const auto start = Clock::now();
    for (const auto& r : rows) {
        const GirthReport rep = girth_report(r.g);
        const oracle::Graph o = support::to_oracle(r.g);
        const oracle::GirthCycles gc = oracle::girth_cycles(o);
        if (rep.regular != r.sig) out.fail(r.name + " signature " + show(rep.regular));
        if (rep.epsilon != support::oracle_epsilon(r.g, gc)) out.fail(r.name + " differs from the oracle");
        const auto sigs = oracle::signatures(o, gc);
        for (const auto& s : sigs) {
            if (Signature(s) != r.sig) {
                out.fail(r.name + " oracle signature " + Signature(s).to_string());
                break;
            }
        }
    }
    const double t = seconds_since(start);
    if (t > 30.0) out.fail("took " + std::to_string(t) + " s");
    info = std::to_string(t) + " s";
}

void criterion3(Outcome& out, std::string& info) {
    const auto start = Clock::now();
    std::size_t edges = 0;
    const auto corpus = support::load_corpus("cubic_connected_n04-n14.g6");
    for (const auto& c : corpus) {
        const std::size_t g = girth(c.graph).value();
        const std::uint64_t bound = std::uint64_t{1} << (g / 2);
        const auto eps = epsilon_all(c.graph);
        for (EdgeId e = 0; e < eps.size(); ++e) {
            if (eps[e] > bound) out.fail(c.id + " edge " + std::to_string(e) + " has " + std::to_string(eps[e]));
        }
        edges += eps.size();
    }
    const double t = seconds_since(start);
    if (corpus.size() != 621) out.fail("corpus has " + std::to_string(corpus.size()) + " graphs");
    if (t > 300.0) out.fail("took " + std::to_string(t) + " s");
    info = std::to_string(corpus.size()) + " graphs, " + std::to_string(edges) + " edges, " + std::to_string(t) + " s";
}

void criterion4(Outcome& out, std::string& info) {
    std::size_t qualifying = 0;
    for (const auto& c : support::load_all(20)) {
        const GirthReport r = girth_report(c.graph);
        if (!r.regular || r.girth > 5) continue;
        ++qualifying;
        try {
            const Classification cl = classify_g5(c.graph);
            if (cl.kind == ClassCase::OutsideTheorem) {
                out.fail(c.id + " outside the classification");
            } else if (!is_isomorphism(c.graph, cl.canonical_graph(), cl.isomorphism)) {
                out.fail(c.id + " isomorphism check failed");
            }
        } catch (const std::exception& e) {
            out.fail(c.id + " threw " + e.what());
        }
    }
    info = std::to_string(qualifying) + " qualifying graphs";
}

void criterion5(Outcome& out, std::string& info) {
    std::size_t n011 = 0;
    std::size_t n112 = 0;
    for (const auto& c : support::load_all(20)) {
        const auto sig = regular_signature(c.graph);
        try {
            if (sig == sig3(0, 1, 1)) {
                ++n011;
                const Decomposition011 d = decompose_011(c.graph);
                const TruncationResult tr = truncate(d.scheme);
                if (!is_isomorphism(tr.graph, c.graph, d.truncation_map(tr)) || !are_isomorphic(tr.graph, c.graph)) {
                    out.fail(c.id + " (0,1,1) round trip");
                }
            } else if (sig == sig3(1, 1, 2)) {
                ++n112;
                const Decomposition112 d = decompose_112(c.graph);
                const TruncationResult tr = truncate_map(d.map);
                if (!is_isomorphism(tr.graph, c.graph, d.truncation_map(tr)) || !are_isomorphic(tr.graph, c.graph)) {
                    out.fail(c.id + " (1,1,2) round trip");
                }
            }
        } catch (const std::exception& e) {
            out.fail(c.id + " threw " + e.what());
        }
    }
    info = std::to_string(n011) + " graphs (0,1,1), " + std::to_string(n112) + " graphs (1,1,2)";
}

void criterion6(Outcome& out, std::string& info) {
    for (const auto& [name, g] : std::vector<std::pair<std::string, MultiGraph>>{
             {"K4", complete_graph(4)}, {"Q3", cube_q3()}, {"dodecahedron", dodecahedron()}}) {
        const auto chi = map_from_222(g).euler_characteristic();
        if (chi != 2) out.fail(name + " chi " + std::to_string(chi));
    }
    const MapComplex m4 = decompose_112(mobius_ladder(4)).map;
    if (m4.skeleton().vertex_count() != 1 || m4.skeleton().edge_count() != 4 || m4.euler_characteristic() != 1) {
        out.fail("M4 skeleton " + std::to_string(m4.skeleton().vertex_count()) + "/" +
                 std::to_string(m4.skeleton().edge_count()) + " chi " + std::to_string(m4.euler_characteristic()));
    }
    const MapComplex y5 = decompose_112(prism(5)).map;
    if (y5.skeleton().vertex_count() != 2 || y5.skeleton().edge_count() != 5 || y5.euler_characteristic() != 2) {
        out.fail("Y5 skeleton " + std::to_string(y5.skeleton().vertex_count()) + "/" +
                 std::to_string(y5.skeleton().edge_count()) + " chi " + std::to_string(y5.euler_characteristic()));
    }
    info = "K4, Q3, dodecahedron chi 2; M4 1/4 chi 1; Y5 2/5 chi 2";
}

void criterion7(Outcome& out, std::string& info) {
    std::size_t graphs = 0;
    std::size_t edges = 0;
    for (const auto& c : support::load_all(16)) {
        const auto gc = oracle::girth_cycles(support::to_oracle(c.graph));
        const auto eps = epsilon_all(c.graph);
        if (eps != support::oracle_epsilon(c.graph, gc)) out.fail(c.id + " epsilon differs from the oracle");
        ++graphs;
        edges += eps.size();
    }
    const std::size_t petersen_cycles = oracle::girth_cycles(oracle::kneser_petersen()).cycles.size();
    const std::size_t heawood_cycles = oracle::girth_cycles(support::to_oracle(heawood())).cycles.size();
    if (petersen_cycles != 12 || girth_report(petersen()).cycle_count != 12) out.fail("Petersen count");
    if (heawood_cycles != 28 || girth_report(heawood()).cycle_count != 28) out.fail("Heawood count");
    info = std::to_string(graphs) + " graphs, " + std::to_string(edges) + " edges; Petersen 12, Heawood 28";
}

void criterion8(Outcome& out, std::string& info) {
    struct Row {
        std::uint64_t g;
        std::uint64_t bound;
        MultiGraph graph;
    };
    const std::vector<Row> rows{{5, 10, petersen()}, {6, 14, heawood()}, {8, 30, tutte_coxeter()}, {12, 126, tutte_12_cage()}};
    for (const auto& r : rows) {
        const std::uint64_t b = moore_bound(3, r.g);
        if (b != r.bound) out.fail("moore_bound(3," + std::to_string(r.g) + ") = " + std::to_string(b));
        if (r.graph.vertex_count() != b || girth(r.graph) != Girth::of(r.g)) {
            out.fail("generated graph for g=" + std::to_string(r.g) + " misses the bound");
        }
    }
    info = "10, 14, 30, 126";
}

void criterion9(Outcome& out, std::string& info) {
    std::size_t checked = 0;
    for (const auto& c : support::load_all(20)) {
        const GirthReport r = girth_report(c.graph);
        if (!r.regular) continue;
        ++checked;
        const std::int64_t a = static_cast<std::int64_t>((*r.regular)[0]);
        const std::int64_t b = static_cast<std::int64_t>((*r.regular)[1]);
        const std::int64_t cc = static_cast<std::int64_t>((*r.regular)[2]);
        const std::int64_t m = (std::int64_t{1} << (r.girth / 2)) - 1;
        const std::string id = c.id + " " + r.regular->to_string();
        if ((a + b + cc) % 2 != 0) out.fail(id + ": odd sum");
        if (a + b < cc) out.fail(id + ": a+b < c");
        if (a == 0 && !(b == 1 && cc == 1)) out.fail(id + ": a=0 without (0,1,1)");
        if (r.girth % 2 == 1 && a == 1) out.fail(id + ": odd girth with a=1");
        if (a < cc - m) out.fail(id + ": a < c-m");
        if (b > a - cc + 2 * m) out.fail(id + ": b > a-c+2m");
    }
    info = std::to_string(checked) + " girth-regular graphs";
}

}  // namespace

int main() {
    const std::vector<std::function<void(Outcome&, std::string&)>> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8, criterion9};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        std::string info;
        try {
            criteria[i](out, info);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << (i + 1) << ": " << (out.ok() ? "PASS" : "FAIL");
        if (!info.empty()) std::cout << " (" << info << ")";
        if (!out.ok()) std::cout << " " << out.failures() << " failure(s): " << out.notes();
        std::cout << std::endl;
        if (!out.ok()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
