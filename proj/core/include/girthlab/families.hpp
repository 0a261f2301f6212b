#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "girthlab/multigraph.hpp"

namespace girthlab {

/// Named family plus integer parameters, e.g. {"prism", {5}}.
///
/// Vertex numbering per family:
///   complete(n)             0..n-1
///   completeBipartite(a,b)  parts 0..a-1 and a..a+b-1
///   cycle(n)                i ~ i+1
///   prism(n)                outer cycle 0..n-1, inner cycle n..2n-1, spokes i ~ n+i
///   mobius(n)               Cay(Z_2n, {-1, 1, n})
///   cayleyCyclic(m, s...)   Z_m, u ~ u+s
///   petersen                outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram 5..9
///   heawood                 Fano points 0..6, lines 7..13 with line j = {j+1, j+2, j+4} mod 7
///   tutteCoxeter, tutte12Cage, dodecahedron
///                           Hamiltonian cycle 0..n-1 plus LCF chords
///   cubeQ3                  3-bit words, adjacent when they differ in one bit
///   hoffmanSingleton        pentagon P_h at 5h..5h+4, pentagram Q_i at 25+5i..25+5i+4
struct FamilySpec {
    std::string name;
    std::vector<std::int64_t> params;
};

/// Names accepted by `generate`, in documentation order.
std::span<const std::string_view> family_names();

/// Throws BadParams for unknown names or out-of-range parameters, and the
/// Cayley errors for bad connection sets.
MultiGraph generate(const FamilySpec& spec);

MultiGraph complete_graph(std::size_t n);
MultiGraph complete_bipartite(std::size_t a, std::size_t b);
MultiGraph cycle_graph(std::size_t n);
MultiGraph prism(std::size_t n);
MultiGraph mobius_ladder(std::size_t n);
MultiGraph petersen();
MultiGraph heawood();
MultiGraph tutte_coxeter();
MultiGraph tutte_12_cage();
MultiGraph dodecahedron();
MultiGraph cube_q3();
MultiGraph hoffman_singleton();

/// Cubic graph on a Hamiltonian cycle 0..n-1 with chord i ~ i + shifts[i mod |shifts|].
MultiGraph lcf_graph(std::size_t n, std::span<const std::int64_t> shifts);

/// Cay(Z_m, conn) as a simple graph. Throws ZeroInConnectionSet,
/// AsymmetricConnectionSet, BadParams (m < 1).
MultiGraph cayley_cyclic(std::int64_t m, std::span<const std::int64_t> conn);

/// Least order of a k-regular graph of girth g, by the summation forms
/// 1 + k * sum_{j<(g-1)/2} (k-1)^j (odd g) and 2 * sum_{j<g/2} (k-1)^j (even g).
/// Throws BadParams for k < 2, g < 3 or a value beyond 64 bits.
std::uint64_t moore_bound(std::uint64_t k, std::uint64_t g);

}  // namespace girthlab
