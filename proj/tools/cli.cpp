#include "cli.hpp"

#include <pilearn/chordal.hpp>
#include <pilearn/csv.hpp>
#include <pilearn/dot.hpp>
#include <pilearn/error.hpp>
#include <pilearn/generators.hpp>
#include <pilearn/model_json.hpp>
#include <pilearn/pi_oracle.hpp>
#include <pilearn/report.hpp>
#include <pilearn/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pilearn::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SourceOptions {
    std::string data;
    std::string model;
    std::string schema;
    std::string reference;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    CLI::Option* sample_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
};

void add_source_options(CLI::App* cmd, SourceOptions& o) {
    auto* data = cmd->add_option("--data", o.data, "CSV dataset: header of names, then integer rows");
    auto* model = cmd->add_option("--model", o.model, "built-in model (table1, music-box) or model JSON path");
    data->excludes(model);
    cmd->add_option("--schema", o.schema, "schema JSON fixing cardinalities for --data")->needs(data);
    o.sample_opt = cmd->add_option("--sample", o.sample, "learn from this many cases drawn from --model")->needs(model);
    o.seed_opt = cmd->add_option("--seed", o.seed, "seed for --sample");
    cmd->add_option("--reference", o.reference, "model JSON to check the learned graph against")->needs(data);
}

struct ResolvedSource {
    ProbabilitySource source;
    std::optional<JointTable> reference;
    RunConfigEcho echo;
};

ResolvedSource resolve(const SourceOptions& o) {
    if (o.data.empty() && o.model.empty()) throw UsageError("one of --data or --model is required");
    RunConfigEcho echo;
    if (!o.model.empty()) {
        auto joint = load_model(o.model);
        echo.source = o.model;
        if (o.sample_opt->count() > 0) {
            echo.source_kind = "sample";
            echo.cases = o.sample;
            echo.seed = o.seed;
            return {ProbabilitySource(sample_joint(joint, o.sample, o.seed)), std::move(joint), echo};
        }
        if (o.seed_opt->count() > 0) throw UsageError("--seed only applies with --sample");
        echo.source_kind = "model";
        return {ProbabilitySource(joint), std::move(joint), echo};
    }

    std::optional<Domain> schema;
    if (!o.schema.empty()) schema = parse_schema_json(o.schema);
    auto data = parse_dataset_csv(o.data, schema);
    if (data.empty()) throw InputError("dataset '" + o.data + "' has no cases");
    echo.source_kind = "data";
    echo.source = o.data;
    echo.cases = data.size();
    std::optional<JointTable> reference;
    if (!o.reference.empty()) {
        reference = load_model(o.reference);
        if (reference->domain().names() != data.domain().names()) {
            throw InputError("reference model variables do not match the dataset header");
        }
    }
    return {ProbabilitySource(std::move(data)), std::move(reference), echo};
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw UsageError("empty variable name in '" + text + "'");
        out.push_back(item);
    }
    return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << text;
}

struct LearnOptions {
    std::size_t max_links = 1;
    double threshold = 0.001;
    std::string mode = "ml";
};

SearchConfig make_config(const LearnOptions& o, const ProbabilitySource& source) {
    if (o.max_links < 1) throw UsageError("--max-links must be at least 1");
    if (!(o.threshold >= 0.0)) throw UsageError("--threshold must be non-negative");
    SearchConfig cfg{source};
    cfg.max_links = o.max_links;
    cfg.delta_h = o.threshold;
    try {
        cfg.mode = parse_search_mode(o.mode);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

RunReport make_report(const SearchConfig& cfg, const ResolvedSource& src, const LearnResult& result,
                      std::optional<double> color_delta) {
    RunReport r;
    r.config = src.echo;
    r.config.mode = std::string(to_string(cfg.mode));
    r.config.max_links = cfg.max_links;
    r.config.threshold = cfg.delta_h;
    r.variables = src.source.domain().names();
    r.links = result.graph.links();
    r.trace = result.trace;
    if (color_delta) r.coloring = color_links(result.graph, src.source, *color_delta).links;
    if (src.reference) r.is_imap = is_imap(result.graph, *src.reference);
    return r;
}

json links_json(const LinkSet& links, const Domain& dom) {
    json out = json::array();
    for (const auto& l : links) out.push_back({dom[l.u].name, dom[l.v].name});
    return out;
}

json partition_json(const PIPartition& p, const Domain& dom) {
    json out = json::array();
    for (const auto& b : p.blocks) out.push_back(dom.names_of(b));
    return out;
}

std::string link_text(const LinkSet& links, const Domain& dom) {
    std::string out = "{";
    for (std::size_t k = 0; k < links.size(); ++k) {
        out += (k ? ", (" : "(") + dom[links[k].u].name + "," + dom[links[k].v].name + ")";
    }
    return out + "}";
}

// ---- subcommands -----------------------------------------------------------

struct LearnCommand {
    SourceOptions source;
    LearnOptions learn;
    std::string out_path;
    std::string dot_path;
    bool color = false;
    double color_delta = 1e-6;

    void attach(CLI::App* cmd) {
        add_source_options(cmd, source);
        cmd->add_option("--max-links,-k", learn.max_links, "largest lookahead link count k");
        cmd->add_option("--threshold", learn.threshold, "entropy decrement threshold in nats");
        cmd->add_option("--mode", learn.mode, "ml | straightforward | single");
        cmd->add_option("--out,-o", out_path, "write the run report JSON here (default stdout)");
        cmd->add_option("--dot", dot_path, "also write the learned graph as DOT");
        cmd->add_flag("--color", color, "color links of the learned graph");
        cmd->add_option("--color-delta", color_delta, "mutual information above which a pair counts as dependent");
    }

    int run(std::ostream& out) {
        const auto src = resolve(source);
        const auto cfg = make_config(learn, src.source);
        const auto result = pilearn::learn(cfg);
        const auto report = make_report(cfg, src, result, color ? std::optional(color_delta) : std::nullopt);
        emit(report_to_json(report), out_path, out);
        if (!dot_path.empty()) {
            const auto& dom = src.source.domain();
            if (report.coloring) {
                export_dot(ColoredGraph{result.graph, *report.coloring}, dom, dot_path);
            } else {
                export_dot(result.graph, dom, dot_path);
            }
        }
        return kOk;
    }
};

struct GenerateCommand {
    std::string model;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string schema_out;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "built-in model or model JSON path")->required();
        cmd->add_option("--n", n, "number of cases")->required();
        cmd->add_option("--seed", seed, "sampler seed (mt19937_64)");
        cmd->add_option("--out,-o", out_path, "CSV output path (default stdout)");
        cmd->add_option("--schema-out", schema_out, "also write the variable schema JSON");
    }

    int run(std::ostream& out) {
        const auto joint = load_model(model);
        const auto data = sample_joint(joint, n, seed);
        std::ostringstream csv;
        write_dataset_csv(csv, data);
        emit(csv.str(), out_path, out);
        if (!schema_out.empty()) emit(schema_to_json(joint.domain()), schema_out, out);
        return kOk;
    }
};

struct AnalyzeCommand {
    std::string model;
    std::size_t max_size = 4;
    std::vector<std::string> classify;
    std::vector<std::string> links;
    std::string graph_report;
    bool complete = false;
    double delta = 1e-6;
    std::string out_path;
    std::string dot_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "built-in model or model JSON path")->required();
        cmd->add_option("--max-size", max_size, "largest embedded submodel size to search");
        cmd->add_option("--classify", classify, "comma-separated subset to classify (repeatable)");
        auto* link = cmd->add_option("--link", links, "link 'x,y' of a graph to analyze (repeatable)");
        auto* graph = cmd->add_option("--graph", graph_report, "take the graph from a run report JSON");
        auto* full = cmd->add_flag("--complete", complete, "analyze the complete graph");
        link->excludes(graph);
        full->excludes(link);
        full->excludes(graph);
        cmd->add_option("--delta", delta, "coloring threshold on pairwise mutual information");
        cmd->add_option("--out,-o", out_path, "analysis JSON output path (default stdout)");
        cmd->add_option("--dot", dot_path, "write the colored graph as DOT");
    }

    std::optional<Graph> graph(const Domain& dom) const {
        if (complete) return Graph::complete(dom.size());
        if (!graph_report.empty()) {
            std::ifstream in(graph_report);
            if (!in) throw InputError("cannot open report '" + graph_report + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            const auto report = report_from_json(buf.str());
            if (report.variables != dom.names()) throw InputError("report variables do not match the model");
            return Graph(dom.size(), report.links);
        }
        if (links.empty()) return std::nullopt;
        Graph g(dom.size());
        for (const auto& text : links) {
            const auto ends = split_names(text);
            if (ends.size() != 2) throw UsageError("--link expects 'x,y', got '" + text + "'");
            g.add_link({dom.index_of(ends[0]), dom.index_of(ends[1])});
        }
        return g;
    }

    int run(std::ostream& out) {
        if (max_size < 3) throw UsageError("--max-size must be at least 3");
        const auto joint = load_model(model);
        const auto& dom = joint.domain();
        json doc;
        doc["variables"] = dom.names();

        const auto submodels = find_embedded_pi_submodels(joint, max_size);
        json subs = json::array();
        for (const auto& m : submodels) {
            subs.push_back({{"subset", dom.names_of(m.subset)},
                            {"verdict", std::string(to_string(m.verdict))},
                            {"partition", partition_json(m.partition, dom)},
                            {"extension", partition_json(m.extension, dom)},
                            {"colored_links", links_json(m.colored_links(), dom)}});
        }
        doc["embedded_submodels"] = std::move(subs);
        std::size_t needed = 1;
        while (!lookahead_bound_satisfied(submodels, needed)) ++needed;
        doc["smallest_sufficient_k"] = needed;

        json classes = json::array();
        for (const auto& text : classify) {
            const auto subset = dom.indices_of(split_names(text));
            const auto cls = classify_pi(joint, subset);
            classes.push_back({{"subset", dom.names_of(subset)},
                               {"verdict", std::string(to_string(cls.verdict))},
                               {"partition", cls.witness ? partition_json(*cls.witness, dom) : json(nullptr)}});
        }
        doc["classifications"] = std::move(classes);

        if (const auto g = graph(dom)) {
            const bool chordal = is_chordal(*g);
            json gj = {{"links", links_json(g->links(), dom)}, {"chordal", chordal}};
            gj["is_imap"] = chordal ? json(is_imap(*g, joint)) : json(is_imap_by_separation(*g, joint));
            gj["minimal_imap"] = is_minimal_imap(*g, joint);
            if (chordal) {
                const auto colored = color_links(*g, ProbabilitySource(joint), delta);
                gj["colored_links"] = links_json(colored.colored(), dom);
                gj["black_links"] = links_json(colored.black(), dom);
                if (!dot_path.empty()) export_dot(colored, dom, dot_path);
            } else if (!dot_path.empty()) {
                export_dot(*g, dom, dot_path);
            }
            doc["graph"] = std::move(gj);
        } else if (!dot_path.empty()) {
            throw UsageError("--dot needs a graph (--link, --graph or --complete)");
        }
        emit(doc.dump(2) + "\n", out_path, out);
        return kOk;
    }
};

struct CompareCommand {
    SourceOptions source;
    LearnOptions learn;
    bool as_json = false;

    void attach(CLI::App* cmd) {
        add_source_options(cmd, source);
        cmd->add_option("--max-links,-k", learn.max_links, "largest lookahead link count k");
        cmd->add_option("--threshold", learn.threshold, "entropy decrement threshold in nats");
        cmd->add_flag("--json", as_json, "emit one run report per mode as a JSON array");
    }

    int run(std::ostream& out) {
        const auto src = resolve(source);
        const auto& dom = src.source.domain();
        json reports = json::array();
        std::ostringstream table;
        table << std::left << std::setw(16) << "mode" << std::setw(7) << "links" << std::setw(7) << "imap"
              << std::setw(8) << "passes" << std::setw(11) << "evaluated" << "entropy\n";
        std::ostringstream details;
        for (auto mode : {SearchMode::ml, SearchMode::straightforward, SearchMode::single}) {
            auto cfg = make_config(learn, src.source);
            cfg.mode = mode;
            const auto result = pilearn::learn(cfg);
            const auto report = make_report(cfg, src, result, std::nullopt);
            if (as_json) {
                reports.push_back(json::parse(report_to_json(report)));
                continue;
            }
            std::ostringstream entropy;
            entropy << std::fixed << std::setprecision(6) << result.trace.final_entropy;
            const std::string imap = report.is_imap ? (*report.is_imap ? "yes" : "no") : "-";
            table << std::setw(16) << to_string(mode) << std::setw(7) << report.links.size() << std::setw(7) << imap
                  << std::setw(8) << result.trace.passes.size() << std::setw(11) << result.trace.total_evaluated
                  << entropy.str() << "\n";
            details << to_string(mode) << ": " << link_text(report.links, dom) << "\n";
        }
        if (as_json) {
            out << reports.dump(2) << "\n";
        } else {
            out << table.str() << "\n" << details.str();
        }
        return kOk;
    }
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Learn decomposable Markov networks with multi-link lookahead search", "pilearn"};
    app.require_subcommand(1);

    LearnCommand learn_cmd;
    GenerateCommand generate_cmd;
    AnalyzeCommand analyze_cmd;
    CompareCommand compare_cmd;
    auto* learn = app.add_subcommand("learn", "learn a graph from a dataset or an exact model");
    auto* generate = app.add_subcommand("generate", "sample a CSV dataset from a model");
    auto* analyze = app.add_subcommand("analyze", "PI classification, embedded submodels, I-map checks, coloring");
    auto* compare = app.add_subcommand("compare", "run ml, straightforward and single-link search side by side");
    learn_cmd.attach(learn);
    generate_cmd.attach(generate);
    analyze_cmd.attach(analyze);
    compare_cmd.attach(compare);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (learn->parsed()) return learn_cmd.run(out);
        if (generate->parsed()) return generate_cmd.run(out);
        if (analyze->parsed()) return analyze_cmd.run(out);
        if (compare->parsed()) return compare_cmd.run(out);
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace pilearn::cli
