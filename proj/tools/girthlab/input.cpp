#include "input.hpp"

#include <algorithm>
#include <iostream>

#include "girthlab/error.hpp"
#include "girthlab/graph6.hpp"

namespace girthlab::cli {
namespace {

namespace fs = std::filesystem;

/// Change in brace depth over `s`, ignoring braces inside strings.
int brace_delta(const std::string& s, bool& in_string) {
    int depth = 0;
    bool escaped = false;
    for (char ch : s) {
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (ch == '\\') {
                escaped = true;
            } else if (ch == '"') {
                in_string = false;
            }
            continue;
        }
        if (ch == '"') in_string = true;
        if (ch == '{' || ch == '[') ++depth;
        if (ch == '}' || ch == ']') --depth;
    }
    return depth;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

InputReader::InputReader(std::vector<std::string> paths, std::size_t vertex_cap) : vertex_cap_(vertex_cap) {
    if (paths.empty()) paths.emplace_back("-");
    for (const auto& p : paths) {
        if (p == "-") {
            sources_.push_back(p);
            continue;
        }
        std::error_code ec;
        if (fs::is_directory(p, ec)) {
            std::vector<std::string> files;
            for (const auto& entry : fs::recursive_directory_iterator(p, ec)) {
                if (entry.is_regular_file()) files.push_back(entry.path().string());
            }
            std::sort(files.begin(), files.end());
            sources_.insert(sources_.end(), files.begin(), files.end());
        } else if (fs::is_regular_file(p, ec)) {
            sources_.push_back(p);
        } else {
            pending_errors_.push_back(InputGraph{p, std::nullopt, std::nullopt, "cannot read '" + p + "'"});
        }
    }
}

bool InputReader::open_next() {
    while (next_source_ < sources_.size()) {
        name_ = sources_[next_source_++];
        line_ = 0;
        if (name_ == "-") {
            file_.reset();
            in_ = &std::cin;
            name_ = "<stdin>";
            return true;
        }
        file_ = std::make_unique<std::ifstream>(name_);
        if (*file_) {
            in_ = file_.get();
            return true;
        }
        pending_errors_.push_back(InputGraph{name_, std::nullopt, std::nullopt, "cannot open '" + name_ + "'"});
    }
    in_ = nullptr;
    return false;
}

std::optional<InputGraph> InputReader::next() {
    for (;;) {
        if (!pending_errors_.empty()) {
            InputGraph e = std::move(pending_errors_.front());
            pending_errors_.erase(pending_errors_.begin());
            return e;
        }
        if (in_ == nullptr && !open_next()) {
            if (!pending_errors_.empty()) continue;
            return std::nullopt;
        }
        std::string line;
        if (!std::getline(*in_, line)) {
            in_ = nullptr;
            continue;
        }
        ++line_;
        std::string text = trim(line);
        if (text.empty()) continue;
        const std::size_t first_line = line_;
        if (text.front() == '{') {
            bool in_string = false;
            int depth = brace_delta(text, in_string);
            while (depth > 0 && std::getline(*in_, line)) {
                ++line_;
                text += '\n';
                text += line;
                depth += brace_delta(line, in_string);
            }
        }
        return decode(std::move(text), first_line);
    }
}

InputGraph InputReader::decode(std::string text, std::size_t line) const {
    InputGraph out;
    out.id = name_ + ":" + std::to_string(line);
    try {
        if (text.front() != '{') {
            out.doc = GraphDocument{parse_graph6(text, vertex_cap_), std::nullopt};
            return out;
        }
        const nlohmann::json doc = nlohmann::json::parse(text);
        const nlohmann::json* body = &doc;
        if (doc.contains("lambda")) body = &doc.at("lambda");
        if (doc.contains("map")) body = &doc.at("map");
        if (body->contains("skeleton")) {
            MapComplex m = read_map_json(*body);
            if (m.skeleton().vertex_count() > vertex_cap_) raise(ErrorCode::VertexCountOverflow, "skeleton exceeds the vertex cap");
            out.doc = GraphDocument{m.skeleton(), m.scheme()};
            out.map.emplace(std::move(m));
            return out;
        }
        if (body->contains("vertices") && body->at("vertices").is_number_integer() &&
            body->at("vertices").get<std::int64_t>() > static_cast<std::int64_t>(vertex_cap_)) {
            raise(ErrorCode::VertexCountOverflow, "graph exceeds the vertex cap of " + std::to_string(vertex_cap_));
        }
        out.doc = read_multigraph_json(*body);
    } catch (const Error& e) {
        out.error = e.what();
    } catch (const nlohmann::json::exception& e) {
        out.error = std::string("SchemaViolation: ") + e.what();
    }
    return out;
}

}  // namespace girthlab::cli
