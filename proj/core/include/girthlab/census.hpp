#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "girthlab/girth.hpp"
#include "girthlab/laws.hpp"
#include "girthlab/multigraph.hpp"

namespace girthlab {

/// Bucket key: girth (empty = Infinite) then signature (empty = not
/// girth-regular). Ordering is girth ascending with Infinite last, then
/// girth-regular buckets by signature, then the irregular bucket.
struct BucketKey {
    std::optional<std::size_t> girth;
    std::optional<Signature> signature;

    friend bool operator<(const BucketKey& x, const BucketKey& y);
    friend bool operator==(const BucketKey&, const BucketKey&) = default;
};

struct LawViolation {
    std::string graph;
    LawResult result;
};

/// Outcome for one graph, produced independently of every other graph.
struct CensusItem {
    std::string id;
    std::optional<std::string> error;  // parse or evaluation error
    BucketKey key;
    std::vector<LawViolation> violations;
    bool laws_checked = false;
};

/// Evaluates one graph: girth report, bucket and law violations. Laws are
/// checked only for connected graphs of finite girth.
CensusItem census_item(std::string id, const MultiGraph& g, unsigned threads = 1,
                       std::size_t iso_cap = kIsomorphismVertexCap);
CensusItem census_error(std::string id, std::string message);

class Census {
public:
    static constexpr std::size_t kExamplesPerBucket = 3;

    struct Bucket {
        std::size_t count = 0;
        std::vector<std::string> examples;
    };

    /// Items must be added in input order for the example lists to be stable.
    void add(CensusItem item);

    std::size_t graphs() const noexcept { return graphs_; }
    std::size_t laws_checked() const noexcept { return laws_checked_; }
    const std::map<BucketKey, Bucket>& buckets() const noexcept { return buckets_; }
    const std::vector<LawViolation>& violations() const noexcept { return violations_; }
    const std::vector<std::pair<std::string, std::string>>& errors() const noexcept { return errors_; }
    bool clean() const noexcept { return violations_.empty() && errors_.empty(); }

    nlohmann::json to_json() const;
    std::string to_text() const;

private:
    std::size_t graphs_ = 0;
    std::size_t laws_checked_ = 0;
    std::map<BucketKey, Bucket> buckets_;
    std::vector<LawViolation> violations_;
    std::vector<std::pair<std::string, std::string>> errors_;
};

}  // namespace girthlab
