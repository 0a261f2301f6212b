#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "girthlab/girthlab.hpp"
#include "input.hpp"

namespace girthlab::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kAnalyzeCap = 100000;
constexpr std::size_t kIsomorphismCap = 512;

struct Options {
    std::string format = "text";
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    std::size_t max_vertices = 0;  // 0: command default
    std::vector<std::string> paths;
    std::string mode;
    std::string family;
    std::vector<std::int64_t> params;
};

std::size_t vertex_cap(const Options& opt, std::size_t fallback) {
    if (opt.max_vertices > 0) return opt.max_vertices;
    if (const char* env = std::getenv("GIRTHLAB_MAX_VERTICES")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid GIRTHLAB_MAX_VERTICES='" << env << "'\n";
    }
    return fallback;
}

/// What one input graph produced.
struct Outcome {
    std::string text;  // text-mode lines, newline-terminated
    json doc;
    std::string warning;
    bool failed = false;
};

Outcome error_outcome(const std::string& id, const std::string& message) {
    return Outcome{id + ": error: " + message + "\n", json{{"id", id}, {"error", message}}, "", true};
}

class Emitter {
public:
    explicit Emitter(std::string format) : format_(std::move(format)) {}

    void emit(const Outcome& o) {
        if (!o.warning.empty()) std::cerr << "warning: " << o.warning << '\n';
        if (format_ == "text") {
            std::cout << o.text;
        } else if (format_ == "json") {
            std::cout << o.doc.dump() << '\n';
        } else {
            array_.push_back(o.doc);
        }
    }

    void finish() {
        if (format_ == "json-array") std::cout << array_.dump() << '\n';
        std::cout.flush();
    }

private:
    std::string format_;
    json array_ = json::array();
};

/// Runs `fn` over the input in batches on `threads` workers and hands the
/// results to `sink` in input order.
template <class Result>
void for_each_input(InputReader& reader, unsigned threads, const std::function<Result(const InputGraph&, unsigned)>& fn,
                    const std::function<void(Result&)>& sink) {
    const std::size_t batch = 256 * std::max(1U, threads);
    for (;;) {
        std::vector<InputGraph> items;
        while (items.size() < batch) {
            auto g = reader.next();
            if (!g) break;
            items.push_back(std::move(*g));
        }
        if (items.empty()) return;
        std::vector<Result> results(items.size());
        // A lone graph gets the threads for its per-edge work instead.
        const unsigned inner = items.size() == 1 ? threads : 1;
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < items.size();) results[i] = fn(items[i], inner);
        };
        const auto workers = static_cast<unsigned>(std::min<std::size_t>(threads, items.size()));
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        }
        for (auto& r : results) sink(r);
    }
}

using GraphFn = std::function<Outcome(const InputGraph&, unsigned)>;

int run_per_graph(const Options& opt, std::size_t cap, const GraphFn& fn) {
    InputReader reader(opt.paths, cap);
    Emitter out(opt.format);
    bool failed = false;
    const std::function<Outcome(const InputGraph&, unsigned)> guarded = [&](const InputGraph& item, unsigned inner) {
        if (item.error) return error_outcome(item.id, *item.error);
        try {
            return fn(item, inner);
        } catch (const Error& e) {
            return error_outcome(item.id, e.what());
        }
    };
    const std::function<void(Outcome&)> sink = [&](Outcome& o) {
        out.emit(o);
        failed = failed || o.failed;
    };
    for_each_input<Outcome>(reader, opt.threads, guarded, sink);
    out.finish();
    return failed ? 1 : 0;
}

std::string signature_text(const GirthReport& r) {
    if (r.regular) return r.regular->to_string();
    std::vector<Signature> distinct(r.signatures);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return "irregular (" + std::to_string(distinct.size()) + " distinct)";
}

int cmd_analyze(const Options& opt) {
    return run_per_graph(opt, vertex_cap(opt, kAnalyzeCap), [](const InputGraph& item, unsigned inner) {
        const MultiGraph& g = item.graph();
        Outcome o;
        const std::string head = item.id + ": vertices=" + std::to_string(g.vertex_count()) +
                                 " edges=" + std::to_string(g.edge_count());
        o.doc = json{{"id", item.id}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
        if (!girth(g).is_finite()) {
            o.warning = item.id + ": graph is a forest; girth Infinite, no signatures";
            o.doc["girth"] = "Infinite";
            o.doc["regular"] = nullptr;
            o.text = head + " girth=Infinite\n";
            return o;
        }
        const GirthReport r = girth_report(g, inner);
        o.doc.update(to_json(r));
        o.text = head + " girth=" + std::to_string(r.girth) + " cycles=" + std::to_string(r.cycle_count) +
                 " signature=" + signature_text(r) + "\n";
        return o;
    });
}

int cmd_generate(const Options& opt) {
    const MultiGraph g = generate(FamilySpec{opt.family, opt.params});
    if (opt.format == "text" && g.is_simple()) {
        std::cout << write_graph6(g) << '\n';
    } else if (opt.format == "json-array") {
        std::cout << json::array({write_multigraph_json(g)}).dump() << '\n';
    } else {
        std::cout << write_multigraph_json(g).dump() << '\n';
    }
    return 0;
}

int cmd_truncate(const Options& opt) {
    return run_per_graph(opt, vertex_cap(opt, kAnalyzeCap), [](const InputGraph& item, unsigned) {
        TruncationResult tr;
        const MultiGraph* base = &item.graph();
        if (item.map) {
            tr = truncate_map(*item.map);
        } else if (item.doc->scheme) {
            tr = truncate(*item.doc->scheme);
        } else {
            tr = truncate(unique_cubic_scheme(item.graph()));
        }
        Outcome o;
        o.text = write_graph6(tr.graph) + "\n";
        o.doc = write_multigraph_json(tr.graph);
        json origin = json::array();
        for (ArcId a : tr.vertex_origin) origin.push_back(arc_ref_json(*base, a));
        o.doc["id"] = item.id;
        o.doc["vertexOrigin"] = std::move(origin);
        return o;
    });
}

int cmd_decompose(const Options& opt) {
    const std::string mode = opt.mode;
    return run_per_graph(opt, vertex_cap(opt, kIsomorphismCap), [mode](const InputGraph& item, unsigned) {
        const MultiGraph& g = item.graph();
        Outcome o;
        if (mode == "011") {
            const Decomposition011 d = decompose_011(g);
            o.doc = to_json(d);
            o.text = item.id + ": mode 011 lambda vertices=" + std::to_string(d.lambda().vertex_count()) +
                     " edges=" + std::to_string(d.lambda().edge_count()) + " girth=" + girth(d.lambda()).to_string() + "\n";
        } else if (mode == "112") {
            const Decomposition112 d = decompose_112(g);
            o.doc = to_json(d);
            o.text = item.id + ": mode 112 skeleton vertices=" + std::to_string(d.map.skeleton().vertex_count()) +
                     " edges=" + std::to_string(d.map.skeleton().edge_count()) + " faces=" +
                     std::to_string(d.map.faces().size()) + " chi=" + std::to_string(d.map.euler_characteristic()) +
                     (d.map.non_orientable_forced() ? " non-orientable" : "") + "\n";
        } else {
            const MapComplex m = map_from_222(g);
            o.doc = json{{"mode", "222"}, {"map", to_json(m)}};
            o.text = item.id + ": mode 222 faces=" + std::to_string(m.faces().size()) +
                     " chi=" + std::to_string(m.euler_characteristic()) +
                     (m.non_orientable_forced() ? " non-orientable" : "") + "\n";
        }
        o.doc["id"] = item.id;
        return o;
    });
}

int cmd_verify(const Options& opt) {
    const std::size_t cap = vertex_cap(opt, kIsomorphismCap);
    return run_per_graph(opt, cap, [cap](const InputGraph& item, unsigned inner) {
        const MultiGraph& g = item.graph();
        if (!g.is_connected()) raise(ErrorCode::Disconnected, "laws are stated for connected graphs");
        const GirthReport report = girth_report(g, inner);
        const auto results = check_all_laws(g, report, cap);
        Outcome o;
        json laws = json::array();
        std::string holds;
        std::string skipped;
        std::string violated;
        for (const auto& r : results) {
            laws.push_back(to_json(r));
            std::string& bucket = !r.applicable ? skipped : (*r.holds ? holds : violated);
            bucket += (bucket.empty() ? "" : ",") + r.id;
            if (r.violated()) o.failed = true;
        }
        o.doc = json{{"id", item.id}, {"laws", std::move(laws)}};
        for (const auto& r : results) {
            if (r.id == "thm-main" && r.applicable) o.doc["classification"] = to_json(classify_g5(g, cap));
        }
        o.text = item.id + ": holds[" + holds + "] n/a[" + skipped + "]";
        if (!violated.empty()) o.text += " VIOLATED[" + violated + "]";
        o.text += "\n";
        for (const auto& r : results) {
            if (r.violated()) o.text += item.id + ": " + r.id + " witness " + r.witness.dump() + "\n";
        }
        return o;
    });
}

int cmd_census(const Options& opt) {
    const std::size_t cap = vertex_cap(opt, kIsomorphismCap);
    InputReader reader(opt.paths, cap);
    Census census;
    const std::function<CensusItem(const InputGraph&, unsigned)> fn = [cap](const InputGraph& item, unsigned inner) {
        if (item.error) return census_error(item.id, *item.error);
        return census_item(item.id, item.graph(), inner, cap);
    };
    const std::function<void(CensusItem&)> sink = [&](CensusItem& item) { census.add(std::move(item)); };
    for_each_input<CensusItem>(reader, opt.threads, fn, sink);
    if (opt.format == "text") {
        std::cout << census.to_text();
    } else if (opt.format == "json") {
        std::cout << census.to_json().dump() << '\n';
    } else {
        std::cout << json::array({census.to_json()}).dump() << '\n';
    }
    return census.clean() ? 0 : 1;
}

void add_common(CLI::App* sub, Options& opt, bool inputs) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "json-array"}))
        ->capture_default_str();
    if (!inputs) return;
    sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--max-vertices", opt.max_vertices, "Per-graph vertex cap (overrides GIRTHLAB_MAX_VERTICES)")
        ->check(CLI::PositiveNumber);
    sub->add_option("inputs", opt.paths, "graph6/sparse6/JSON files or directories; stdin when omitted");
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"girthlab: girth cycles, signatures, truncations and maps of finite graphs"};
    app.require_subcommand(1);
    Options opt;

    auto* analyze = app.add_subcommand("analyze", "Girth, girth-cycle counts and signatures per graph");
    add_common(analyze, opt, true);

    auto* gen = app.add_subcommand("generate", "Emit a named graph");
    add_common(gen, opt, false);
    std::string names;
    for (auto n : family_names()) names += (names.empty() ? "" : ", ") + std::string(n);
    gen->add_option("family", opt.family, "One of: " + names)->required();
    gen->add_option("params", opt.params, "Integer parameters");

    auto* trunc = app.add_subcommand("truncate", "Truncate graphs (cubic graphs use their unique scheme)");
    add_common(trunc, opt, true);

    auto* decomp = app.add_subcommand("decompose", "Decompose by signature and print the witness");
    add_common(decomp, opt, true);
    decomp->add_option("--mode", opt.mode, "Signature case")->required()->check(CLI::IsMember({"011", "112", "222"}));

    auto* verify = app.add_subcommand("verify", "Evaluate every law on each graph");
    add_common(verify, opt, true);

    auto* census = app.add_subcommand("census", "Tally graphs by (girth, signature) and report law violations");
    add_common(census, opt, true);

    // Decomposition witnesses are objects; print them as JSON unless asked otherwise.
    decomp->preparse_callback([&](std::size_t) { opt.format = "json"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (gen->parsed()) return cmd_generate(opt);
        if (trunc->parsed()) return cmd_truncate(opt);
        if (decomp->parsed()) return cmd_decompose(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (census->parsed()) return cmd_census(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::BadParams ? 2 : 1;
    }
    return 2;
}

}  // namespace girthlab::cli

int main(int argc, char** argv) { return girthlab::cli::run(argc, argv); }
