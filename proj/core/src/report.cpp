#include <pilearn/report.hpp>

#include <pilearn/error.hpp>

#include <json.hpp>

namespace pilearn {

namespace {

using nlohmann::json;

json link_json(const Link& l, const std::vector<std::string>& names) {
    return json::array({names.at(l.u), names.at(l.v)});
}

json links_json(const LinkSet& links, const std::vector<std::string>& names) {
    json out = json::array();
    for (const auto& l : links) out.push_back(link_json(l, names));
    return out;
}

std::size_t index_in(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw InputError("report refers to unknown variable '" + name + "'");
}

Link link_from(const json& j, const std::vector<std::string>& names) {
    if (!j.is_array() || j.size() != 2) throw InputError("link must be a [name, name] pair");
    const auto a = index_in(names, j[0].get<std::string>());
    const auto b = index_in(names, j[1].get<std::string>());
    if (a == b) throw InputError("self-loop in report");
    return Link(a, b);
}

LinkSet links_from(const json& j, const std::vector<std::string>& names) {
    LinkSet out;
    for (const auto& l : j) out.push_back(link_from(l, names));
    try {
        return make_link_set(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string report_to_json(const RunReport& r) {
    const auto& names = r.variables;
    json config = {{"mode", r.config.mode},
                   {"max_links", r.config.max_links},
                   {"threshold", r.config.threshold},
                   {"source_kind", r.config.source_kind},
                   {"source", r.config.source},
                   {"cases", r.config.cases},
                   {"seed", optional_json(r.config.seed)}};

    json passes = json::array();
    for (const auto& p : r.trace.passes) {
        passes.push_back({{"level", p.level},
                          {"learned_links", p.adopted ? links_json(*p.adopted, names) : json(nullptr)},
                          {"candidates_enumerated", p.candidates_enumerated},
                          {"candidates_evaluated", p.candidates_evaluated},
                          {"decrement", optional_json(p.decrement)},
                          {"best_decrement", p.best_decrement},
                          {"entropy_after", p.entropy_after},
                          {"cumulative_evaluated", p.cumulative_evaluated}});
    }
    json trace = {{"passes", std::move(passes)},
                  {"initial_entropy", r.trace.initial_entropy},
                  {"final_entropy", r.trace.final_entropy},
                  {"total_enumerated", r.trace.total_enumerated},
                  {"total_evaluated", r.trace.total_evaluated},
                  {"max_clique_size", r.trace.max_clique_size}};

    json doc = {{"config", std::move(config)},
                {"variables", names},
                {"links", links_json(r.links, names)},
                {"trace", std::move(trace)}};
    if (r.coloring) {
        json colored = json::array();
        for (const auto& cl : *r.coloring) {
            colored.push_back({{"link", link_json(cl.link, names)}, {"color", std::string(to_string(cl.color))}});
        }
        doc["coloring"] = std::move(colored);
    } else {
        doc["coloring"] = nullptr;
    }
    doc["is_imap"] = optional_json(r.is_imap);
    return doc.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
    try {
        const auto doc = json::parse(text);
        RunReport r;
        const auto& c = doc.at("config");
        r.config.mode = c.at("mode").get<std::string>();
        r.config.max_links = c.at("max_links").get<std::size_t>();
        r.config.threshold = c.at("threshold").get<double>();
        r.config.source_kind = c.at("source_kind").get<std::string>();
        r.config.source = c.at("source").get<std::string>();
        r.config.cases = c.at("cases").get<std::size_t>();
        if (!c.at("seed").is_null()) r.config.seed = c.at("seed").get<std::uint64_t>();

        r.variables = doc.at("variables").get<std::vector<std::string>>();
        const auto& names = r.variables;
        r.links = links_from(doc.at("links"), names);

        const auto& t = doc.at("trace");
        for (const auto& p : t.at("passes")) {
            PassRecord rec;
            rec.level = p.at("level").get<std::size_t>();
            if (!p.at("learned_links").is_null()) rec.adopted = links_from(p.at("learned_links"), names);
            rec.candidates_enumerated = p.at("candidates_enumerated").get<std::size_t>();
            rec.candidates_evaluated = p.at("candidates_evaluated").get<std::size_t>();
            if (!p.at("decrement").is_null()) rec.decrement = p.at("decrement").get<double>();
            rec.best_decrement = p.at("best_decrement").get<double>();
            rec.entropy_after = p.at("entropy_after").get<double>();
            rec.cumulative_evaluated = p.at("cumulative_evaluated").get<std::size_t>();
            r.trace.passes.push_back(std::move(rec));
        }
        r.trace.initial_entropy = t.at("initial_entropy").get<double>();
        r.trace.final_entropy = t.at("final_entropy").get<double>();
        r.trace.total_enumerated = t.at("total_enumerated").get<std::size_t>();
        r.trace.total_evaluated = t.at("total_evaluated").get<std::size_t>();
        r.trace.max_clique_size = t.at("max_clique_size").get<std::size_t>();

        if (doc.contains("coloring") && !doc.at("coloring").is_null()) {
            std::vector<ColoredLink> coloring;
            for (const auto& cl : doc.at("coloring")) {
                const auto color = cl.at("color").get<std::string>();
                if (color != "colored" && color != "black") throw InputError("unknown link color '" + color + "'");
                coloring.push_back(
                    {link_from(cl.at("link"), names), color == "colored" ? LinkColor::colored : LinkColor::black});
            }
            r.coloring = std::move(coloring);
        }
        if (doc.contains("is_imap") && !doc.at("is_imap").is_null()) r.is_imap = doc.at("is_imap").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid run report: ") + e.what());
    }
}

}  // namespace pilearn
