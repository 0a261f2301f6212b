#include "girthlab/graph6.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "girthlab/error.hpp"

namespace girthlab {
namespace {

constexpr int kBias = 63;

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

/// Reads big-endian 6-bit groups from the body of a graph6/sparse6 line.
class BitReader {
public:
    explicit BitReader(std::string_view bytes) : bytes_(bytes) {}

    std::size_t remaining() const noexcept { return 6 * bytes_.size() - pos_; }

    unsigned bit() {
        const unsigned byte = static_cast<unsigned char>(bytes_[pos_ / 6]) - kBias;
        const unsigned b = (byte >> (5 - pos_ % 6)) & 1U;
        ++pos_;
        return b;
    }

    std::uint64_t bits(unsigned count) {
        std::uint64_t x = 0;
        for (unsigned i = 0; i < count; ++i) x = (x << 1) | bit();
        return x;
    }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

void check_printable(std::string_view body) {
    for (std::size_t i = 0; i < body.size(); ++i) {
        const auto c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) {
            raise(ErrorCode::MalformedEncoding, "byte " + std::to_string(i) + " (value " + std::to_string(c) +
                                                    ") outside the printable range 63..126");
        }
    }
}

/// Decodes N(n) and advances `s` past it.
std::uint64_t read_vertex_count(std::string_view& s, std::size_t cap) {
    if (s.empty()) raise(ErrorCode::MalformedEncoding, "empty encoding");
    std::size_t len = 1;
    std::size_t skip = 0;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126) {
            skip = 2;
            len = 6;
        } else {
            skip = 1;
            len = 3;
        }
    }
    if (s.size() < skip + len) raise(ErrorCode::MalformedEncoding, "truncated vertex count");
    check_printable(s.substr(skip, len));
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < len; ++i) n = (n << 6) | static_cast<std::uint64_t>(s[skip + i] - kBias);
    s.remove_prefix(skip + len);
    if (n > cap) {
        raise(ErrorCode::VertexCountOverflow, "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    return n;
}

void write_vertex_count(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    }
}

MultiGraph parse_dense(std::string_view s, std::size_t cap) {
    const std::uint64_t n = read_vertex_count(s, cap);
    check_printable(s);
    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t need = (pairs + 5) / 6;
    if (s.size() != need) {
        raise(ErrorCode::MalformedEncoding, "graph6 body has " + std::to_string(s.size()) + " bytes, expected " +
                                                std::to_string(need) + " for n = " + std::to_string(n));
    }
    BitReader bits(s);
    std::vector<Edge> edges;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i) {
            if (bits.bit()) edges.push_back({i, j});
        }
    }
    return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
}

MultiGraph parse_sparse(std::string_view s, std::size_t cap) {
    const std::uint64_t n = read_vertex_count(s, cap);
    check_printable(s);
    unsigned k = 0;
    while (n > 1 && (std::uint64_t{1} << k) < n) ++k;

    BitReader bits(s);
    std::vector<Edge> edges;
    std::uint64_t v = 0;
    while (bits.remaining() >= k + 1) {
        if (bits.bit()) ++v;
        const std::uint64_t x = bits.bits(k);
        if (v >= n) break;
        if (x > v) {
            v = x;
        } else {
            edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(v)});
        }
    }
    return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace

MultiGraph parse_graph6(std::string_view line, std::size_t vertex_cap) {
    std::string_view s = strip(line);
    bool sparse = false;
    if (s.starts_with(">>graph6<<")) {
        s.remove_prefix(10);
    } else if (s.starts_with(">>sparse6<<")) {
        s.remove_prefix(11);
        sparse = true;
        if (!s.starts_with(':')) raise(ErrorCode::MalformedEncoding, "sparse6 header without ':'");
    }
    if (s.starts_with(':')) {
        s.remove_prefix(1);
        return parse_sparse(s, vertex_cap);
    }
    if (sparse) raise(ErrorCode::MalformedEncoding, "sparse6 header on a non-sparse6 line");
    if (s.starts_with(';')) raise(ErrorCode::MalformedEncoding, "incremental sparse6 is not supported");
    if (s.starts_with('&')) raise(ErrorCode::MalformedEncoding, "digraph6 is not supported");
    return parse_dense(s, vertex_cap);
}

std::string write_graph6(const MultiGraph& g) {
    if (!g.is_simple()) raise(ErrorCode::NotSimple, "graph6 cannot encode loops or parallel edges");
    const std::size_t n = g.vertex_count();
    std::string out;
    write_vertex_count(out, n);

    // Lower neighbours per vertex, so column j of the upper triangle is a merge scan.
    std::vector<std::vector<VertexId>> lower(n);
    for (const Edge& e : g.edges()) {
        const auto [lo, hi] = std::minmax(e.first, e.second);
        lower[hi].push_back(lo);
    }
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        std::sort(lower[j].begin(), lower[j].end());
        auto next = lower[j].begin();
        for (std::size_t i = 0; i < j; ++i) {
            const bool bit = next != lower[j].end() && *next == i;
            if (bit) ++next;
            acc = (acc << 1) | static_cast<unsigned>(bit);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace girthlab
