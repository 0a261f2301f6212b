#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/maps.hpp"
#include "girthlab/multigraph_json.hpp"

namespace girthlab::cli {

/// One graph read from a file or stdin, or the error that prevented it.
struct InputGraph {
    std::string id;  // "path:line"
    std::optional<GraphDocument> doc;
    std::optional<MapComplex> map;  // set for map documents (doc then holds the skeleton)
    std::optional<std::string> error;

    const MultiGraph& graph() const { return doc->graph; }
};

/// Streams graphs from paths in argument order; directories are walked
/// recursively in sorted path order. No paths (or "-") means stdin.
/// Unreadable paths come back as error entries.
///
/// Lines are graph6/sparse6; a line starting with '{' opens a JSON document
/// that may continue over following lines until its braces balance.
/// Accepted documents: multigraph JSON (optional "scheme"), maps
/// ({"skeleton", "faces"}), and decomposition witnesses ("lambda" or "map").
class InputReader {
public:
    InputReader(std::vector<std::string> paths, std::size_t vertex_cap);

    /// Next graph, or nothing at end of input.
    std::optional<InputGraph> next();

private:
    bool open_next();
    InputGraph decode(std::string text, std::size_t line) const;

    std::vector<std::string> sources_;
    std::size_t next_source_ = 0;
    std::size_t vertex_cap_;
    std::unique_ptr<std::ifstream> file_;
    std::istream* in_ = nullptr;
    std::string name_;
    std::size_t line_ = 0;
    std::vector<InputGraph> pending_errors_;
};

}  // namespace girthlab::cli
