#include "girthlab/families.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "girthlab/error.hpp"

namespace girthlab {
namespace {

constexpr std::array<std::string_view, 13> kNames{
    "complete",     "completeBipartite", "cycle",        "prism",       "mobius",
    "cayleyCyclic", "petersen",          "heawood",      "tutteCoxeter", "tutte12Cage",
    "dodecahedron", "cubeQ3",            "hoffmanSingleton",
};

// LCF codes as tabulated in the standard graph catalogues.
constexpr std::array<std::int64_t, 6> kTutteCoxeterLcf{-13, -9, 7, -7, 9, 13};
constexpr std::array<std::int64_t, 18> kTutte12CageLcf{17, 27, -13, -59, -35, 35, -11, 13, -53,
                                                       53, -27, 21, 57,  11,  -21, -57, 59, -17};
constexpr std::array<std::int64_t, 10> kDodecahedronLcf{10, 7, 4, -4, -7, 10, -4, 7, -7, 4};

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

VertexId mod(std::int64_t x, std::int64_t m) { return static_cast<VertexId>(((x % m) + m) % m); }

std::size_t count_param(const FamilySpec& spec, std::size_t index, std::int64_t least) {
    if (spec.params.size() <= index) {
        raise(ErrorCode::BadParams, spec.name + ": missing parameter " + std::to_string(index + 1));
    }
    const std::int64_t v = spec.params[index];
    if (v < least) raise(ErrorCode::BadParams, spec.name + ": parameter " + std::to_string(v) + " below " + std::to_string(least));
    if (v > 10'000'000) raise(ErrorCode::BadParams, spec.name + ": parameter " + std::to_string(v) + " too large");
    return static_cast<std::size_t>(v);
}

void expect_arity(const FamilySpec& spec, std::size_t arity) {
    if (spec.params.size() != arity) {
        raise(ErrorCode::BadParams, spec.name + " takes " + std::to_string(arity) + " parameter(s), got " +
                                        std::to_string(spec.params.size()));
    }
}

}  // namespace

std::span<const std::string_view> family_names() { return kNames; }

MultiGraph complete_graph(std::size_t n) {
    Pairs p;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) p.emplace_back(i, j);
    }
    return make_graph(n, p);
}

MultiGraph complete_bipartite(std::size_t a, std::size_t b) {
    Pairs p;
    for (VertexId i = 0; i < a; ++i) {
        for (VertexId j = 0; j < b; ++j) p.emplace_back(i, static_cast<VertexId>(a + j));
    }
    return make_graph(a + b, p);
}

MultiGraph cycle_graph(std::size_t n) {
    Pairs p;
    for (VertexId i = 0; i < n; ++i) p.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return make_graph(n, p);
}

MultiGraph prism(std::size_t n) {
    Pairs p;
    const auto m = static_cast<VertexId>(n);
    for (VertexId i = 0; i < m; ++i) p.emplace_back(i, (i + 1) % m);
    for (VertexId i = 0; i < m; ++i) p.emplace_back(m + i, m + (i + 1) % m);
    for (VertexId i = 0; i < m; ++i) p.emplace_back(i, m + i);
    return make_graph(2 * n, p);
}

MultiGraph mobius_ladder(std::size_t n) {
    const auto m = static_cast<std::int64_t>(n);
    const std::array<std::int64_t, 3> conn{-1, 1, m};
    return cayley_cyclic(2 * m, conn);
}

MultiGraph petersen() {
    Pairs p;
    for (VertexId i = 0; i < 5; ++i) p.emplace_back(i, (i + 1) % 5);
    for (VertexId i = 0; i < 5; ++i) p.emplace_back(i, i + 5);
    for (VertexId i = 0; i < 5; ++i) p.emplace_back(5 + i, 5 + (i + 2) % 5);
    return make_graph(10, p);
}

MultiGraph heawood() {
    Pairs p;
    for (VertexId j = 0; j < 7; ++j) {
        for (VertexId r : {1U, 2U, 4U}) p.emplace_back((j + r) % 7, 7 + j);
    }
    return make_graph(14, p);
}

MultiGraph lcf_graph(std::size_t n, std::span<const std::int64_t> shifts) {
    if (n < 3 || shifts.empty()) raise(ErrorCode::BadParams, "LCF graph needs n >= 3 and a non-empty code");
    const auto m = static_cast<std::int64_t>(n);
    std::set<std::pair<VertexId, VertexId>> chords;
    Pairs p;
    for (VertexId i = 0; i < n; ++i) p.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    for (std::int64_t i = 0; i < m; ++i) {
        const VertexId u = mod(i, m);
        const VertexId v = mod(i + shifts[static_cast<std::size_t>(i) % shifts.size()], m);
        if (u == v) raise(ErrorCode::BadParams, "LCF chord is a loop");
        if (chords.insert({std::min(u, v), std::max(u, v)}).second) p.emplace_back(std::min(u, v), std::max(u, v));
    }
    return make_graph(n, p);
}

MultiGraph tutte_coxeter() { return lcf_graph(30, kTutteCoxeterLcf); }
MultiGraph tutte_12_cage() { return lcf_graph(126, kTutte12CageLcf); }
MultiGraph dodecahedron() { return lcf_graph(20, kDodecahedronLcf); }

MultiGraph cube_q3() {
    Pairs p;
    for (VertexId v = 0; v < 8; ++v) {
        for (VertexId bit = 1; bit < 8; bit <<= 1) {
            if (v < (v ^ bit)) p.emplace_back(v, v ^ bit);
        }
    }
    return make_graph(8, p);
}

MultiGraph hoffman_singleton() {
    Pairs p;
    auto pent = [](VertexId h, VertexId j) { return 5 * h + j % 5; };
    auto gram = [](VertexId i, VertexId j) { return 25 + 5 * i + j % 5; };
    for (VertexId h = 0; h < 5; ++h) {
        for (VertexId j = 0; j < 5; ++j) p.emplace_back(pent(h, j), pent(h, j + 1));
    }
    for (VertexId i = 0; i < 5; ++i) {
        for (VertexId j = 0; j < 5; ++j) p.emplace_back(gram(i, j), gram(i, j + 2));
    }
    for (VertexId h = 0; h < 5; ++h) {
        for (VertexId i = 0; i < 5; ++i) {
            for (VertexId j = 0; j < 5; ++j) p.emplace_back(pent(h, j), gram(i, h * i + j));
        }
    }
    return make_graph(50, p);
}

MultiGraph cayley_cyclic(std::int64_t m, std::span<const std::int64_t> conn) {
    if (m < 1 || m > 10'000'000) raise(ErrorCode::BadParams, "modulus " + std::to_string(m) + " out of range");
    std::set<VertexId> set;
    for (std::int64_t s : conn) set.insert(mod(s, m));
    if (set.contains(0)) raise(ErrorCode::ZeroInConnectionSet, "connection set contains 0 mod " + std::to_string(m));
    for (VertexId s : set) {
        if (!set.contains(mod(-static_cast<std::int64_t>(s), m))) {
            raise(ErrorCode::AsymmetricConnectionSet, std::to_string(s) + " is in the connection set but -" + std::to_string(s) +
                                                          " is not (mod " + std::to_string(m) + ")");
        }
    }
    Pairs p;
    for (VertexId u = 0; u < m; ++u) {
        for (VertexId s : set) {
            const VertexId v = mod(static_cast<std::int64_t>(u) + s, m);
            if (u < v) p.emplace_back(u, v);
        }
    }
    std::sort(p.begin(), p.end());
    return make_graph(static_cast<std::size_t>(m), p);
}

MultiGraph generate(const FamilySpec& spec) {
    const std::string& name = spec.name;
    if (name == "complete") {
        expect_arity(spec, 1);
        return complete_graph(count_param(spec, 0, 1));
    }
    if (name == "completeBipartite") {
        expect_arity(spec, 2);
        return complete_bipartite(count_param(spec, 0, 1), count_param(spec, 1, 1));
    }
    if (name == "cycle") {
        expect_arity(spec, 1);
        return cycle_graph(count_param(spec, 0, 3));
    }
    if (name == "prism") {
        expect_arity(spec, 1);
        return prism(count_param(spec, 0, 3));
    }
    if (name == "mobius") {
        expect_arity(spec, 1);
        return mobius_ladder(count_param(spec, 0, 3));
    }
    if (name == "cayleyCyclic") {
        if (spec.params.empty()) raise(ErrorCode::BadParams, "cayleyCyclic needs a modulus");
        return cayley_cyclic(spec.params[0], std::span(spec.params).subspan(1));
    }
    if (name == "petersen") {
        expect_arity(spec, 0);
        return petersen();
    }
    if (name == "heawood") {
        expect_arity(spec, 0);
        return heawood();
    }
    if (name == "tutteCoxeter") {
        expect_arity(spec, 0);
        return tutte_coxeter();
    }
    if (name == "tutte12Cage") {
        expect_arity(spec, 0);
        return tutte_12_cage();
    }
    if (name == "dodecahedron") {
        expect_arity(spec, 0);
        return dodecahedron();
    }
    if (name == "cubeQ3") {
        expect_arity(spec, 0);
        return cube_q3();
    }
    if (name == "hoffmanSingleton") {
        expect_arity(spec, 0);
        return hoffman_singleton();
    }
    raise(ErrorCode::BadParams, "unknown family '" + name + "'");
}

std::uint64_t moore_bound(std::uint64_t k, std::uint64_t g) {
    if (k < 2 || g < 3) raise(ErrorCode::BadParams, "moore bound needs k >= 2 and g >= 3");
    auto overflow = [&] { raise(ErrorCode::BadParams, "moore bound exceeds 64 bits"); };
    std::uint64_t sum = 0;
    std::uint64_t term = 1;
    const std::uint64_t terms = (g % 2 == 1) ? (g - 1) / 2 : g / 2;
    for (std::uint64_t j = 0; j < terms; ++j) {
        if (j > 0 && __builtin_mul_overflow(term, k - 1, &term)) overflow();
        if (__builtin_add_overflow(sum, term, &sum)) overflow();
    }
    std::uint64_t out = 0;
    if (g % 2 == 1) {
        if (__builtin_mul_overflow(sum, k, &out) || __builtin_add_overflow(out, 1, &out)) overflow();
    } else if (__builtin_mul_overflow(sum, 2, &out)) {
        overflow();
    }
    return out;
}

}  // namespace girthlab
