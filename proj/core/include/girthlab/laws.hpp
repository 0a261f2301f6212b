#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "girthlab/girth.hpp"
#include "girthlab/isomorphism.hpp"
#include "girthlab/multigraph.hpp"
#include "girthlab/truncation.hpp"

namespace girthlab {

/// One statement evaluated on one graph. `holds` is empty when the
/// statement's hypotheses are not met.
struct LawResult {
    std::string id;
    bool applicable = false;
    std::optional<bool> holds;
    nlohmann::json witness;  // numbers needed to recheck a violation; null when it holds

    bool violated() const noexcept { return holds.has_value() && !*holds; }
};

/// Law identifiers in evaluation order.
const std::vector<std::string>& law_ids();

/// Throws Disconnected, InfiniteGirth.
std::vector<LawResult> check_all_laws(const MultiGraph& g, std::size_t iso_cap = kIsomorphismVertexCap);

/// Same, reusing a report already computed for `g`.
std::vector<LawResult> check_all_laws(const MultiGraph& g, const GirthReport& report,
                                      std::size_t iso_cap = kIsomorphismVertexCap);

nlohmann::json to_json(const LawResult& r);

enum class ClassCase { Trunc011, K4, PrismOrMobius, K33, Q3, Petersen, Dodecahedron, OutsideTheorem };

std::string_view to_string(ClassCase c) noexcept;

struct Classification {
    ClassCase kind = ClassCase::OutsideTheorem;
    std::size_t girth = 0;
    Signature signature;
    std::string family;  // "prism" or "mobius" for PrismOrMobius
    std::size_t n = 0;    // ladder parameter for PrismOrMobius
    std::optional<Decomposition011> witness;
    std::vector<VertexId> isomorphism;  // input vertex -> vertex of canonical_graph()
    std::string detail;

    /// Concrete graph named by the case (the truncation of the witness for
    /// Trunc011). Empty graph for OutsideTheorem.
    MultiGraph canonical_graph() const;
};

/// Case of the girth <= 5 cubic classification, confirmed by isomorphism
/// with the named graph. Throws Preconditions when the input is not simple,
/// connected, cubic and girth-regular of girth at most 5.
Classification classify_g5(const MultiGraph& g, std::size_t iso_cap = kIsomorphismVertexCap);

nlohmann::json to_json(const Classification& c);

}  // namespace girthlab
