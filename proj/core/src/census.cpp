#include "girthlab/census.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "girthlab/error.hpp"

namespace girthlab {
namespace {

std::string girth_label(const BucketKey& k) { return k.girth ? std::to_string(*k.girth) : "Infinite"; }
std::string signature_label(const BucketKey& k) {
    if (!k.girth) return "-";
    return k.signature ? k.signature->to_string() : "irregular";
}

}  // namespace

bool operator<(const BucketKey& x, const BucketKey& y) {
    const auto gx = x.girth.value_or(SIZE_MAX);
    const auto gy = y.girth.value_or(SIZE_MAX);
    if (gx != gy) return gx < gy;
    if (x.signature.has_value() != y.signature.has_value()) return x.signature.has_value();
    return x.signature && *x.signature < *y.signature;
}

CensusItem census_item(std::string id, const MultiGraph& g, unsigned threads, std::size_t iso_cap) {
    CensusItem item;
    item.id = std::move(id);
    try {
        const Girth gi = girth(g);
        if (!gi.is_finite()) return item;
        const GirthReport report = girth_report(g, threads);
        item.key.girth = report.girth;
        item.key.signature = report.regular;
        if (!g.is_connected()) return item;
        item.laws_checked = true;
        for (auto& r : check_all_laws(g, report, iso_cap)) {
            if (r.violated()) item.violations.push_back({item.id, std::move(r)});
        }
    } catch (const Error& e) {
        item.error = e.what();
    }
    return item;
}

CensusItem census_error(std::string id, std::string message) {
    CensusItem item;
    item.id = std::move(id);
    item.error = std::move(message);
    return item;
}

void Census::add(CensusItem item) {
    if (item.error) {
        errors_.emplace_back(std::move(item.id), std::move(*item.error));
        return;
    }
    ++graphs_;
    if (item.laws_checked) ++laws_checked_;
    Bucket& b = buckets_[item.key];
    ++b.count;
    if (b.examples.size() < kExamplesPerBucket) b.examples.push_back(item.id);
    for (auto& v : item.violations) violations_.push_back(std::move(v));
}

nlohmann::json Census::to_json() const {
    nlohmann::json buckets = nlohmann::json::array();
    for (const auto& [key, b] : buckets_) {
        buckets.push_back({{"girth", key.girth ? nlohmann::json(*key.girth) : nlohmann::json("Infinite")},
                           {"signature", key.signature ? nlohmann::json(key.signature->entries()) : nlohmann::json()},
                           {"count", b.count},
                           {"examples", b.examples}});
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : violations_) {
        nlohmann::json r = girthlab::to_json(v.result);
        r["graph"] = v.graph;
        violations.push_back(std::move(r));
    }
    nlohmann::json errors = nlohmann::json::array();
    for (const auto& [id, msg] : errors_) errors.push_back({{"graph", id}, {"error", msg}});
    return {{"graphs", graphs_},
            {"lawsChecked", laws_checked_},
            {"buckets", std::move(buckets)},
            {"violations", std::move(violations)},
            {"errors", std::move(errors)}};
}

std::string Census::to_text() const {
    std::vector<std::array<std::string, 4>> rows{{"girth", "signature", "count", "examples"}};
    for (const auto& [key, b] : buckets_) {
        std::string ex;
        for (const auto& id : b.examples) ex += (ex.empty() ? "" : " ") + id;
        rows.push_back({girth_label(key), signature_label(key), std::to_string(b.count), ex});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::ostringstream out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < 4; ++i) {
            std::string cell = r[i];
            if (i + 1 < 4) cell.resize(width[i], ' ');
            line += (i ? "  " : "") + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    out << "graphs: " << graphs_ << ", laws checked: " << laws_checked_ << ", violations: " << violations_.size()
        << ", errors: " << errors_.size() << '\n';
    for (const auto& v : violations_) out << "violation " << v.result.id << " in " << v.graph << ": " << v.result.witness.dump() << '\n';
    for (const auto& [id, msg] : errors_) out << "error in " << id << ": " << msg << '\n';
    return out.str();
}

}  // namespace girthlab
