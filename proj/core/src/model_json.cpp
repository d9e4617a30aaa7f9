#include <pilearn/model_json.hpp>

#include <pilearn/error.hpp>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace pilearn {

namespace {

using nlohmann::json;

constexpr double kFileMassTolerance = 1e-6;

JointTable joint_from(const Domain& domain, const json& entries) {
    std::vector<double> p(domain.state_count(), 0.0);
    std::vector<bool> seen(p.size(), false);
    for (const auto& e : entries) {
        const auto assignment = e.at("assignment").get<std::vector<State>>();
        std::size_t code = 0;
        try {
            code = domain.encode(assignment);
        } catch (const std::invalid_argument& err) {
            throw InputError(std::string("bad assignment in joint: ") + err.what());
        }
        if (seen[code]) throw InputError("assignment listed twice in joint");
        seen[code] = true;
        const double prob = e.at("p").get<double>();
        if (!(prob >= 0.0) || !std::isfinite(prob)) throw InputError("joint probabilities must be non-negative");
        p[code] = prob;
    }
    double total = 0.0;
    for (double x : p) total += x;
    if (std::abs(total - 1.0) > kFileMassTolerance) {
        throw InputError("joint probability mass is " + std::to_string(total) + ", expected 1");
    }
    for (double& x : p) x /= total;
    return JointTable(domain, std::move(p));
}

BayesSpec bayes_from(const Domain& domain, const json& bayes) {
    BayesSpec spec;
    spec.domain = domain;
    for (const auto& node : bayes.at("nodes")) {
        BayesNode bn;
        const auto name = node.at("name").get<std::string>();
        auto v = domain.find(name);
        if (!v) throw InputError("bayes node '" + name + "' is not a declared variable");
        bn.variable = *v;
        for (const auto& parent : node.value("parents", json::array())) {
            const auto pname = parent.get<std::string>();
            auto pv = domain.find(pname);
            if (!pv) throw InputError("parent '" + pname + "' of '" + name + "' is not a declared variable");
            bn.parents.push_back(*pv);
        }
        bn.rows = node.at("cpt").get<std::vector<std::vector<double>>>();
        spec.nodes.push_back(std::move(bn));
    }
    return spec;
}

}  // namespace

JointTable model_from_json(std::string_view text) {
    try {
        const auto doc = json::parse(text);
        std::vector<std::pair<std::string, std::size_t>> vars;
        for (const auto& v : doc.at("variables")) {
            vars.emplace_back(v.at("name").get<std::string>(), v.at("cardinality").get<std::size_t>());
        }
        const Domain domain(std::move(vars));
        const bool has_joint = doc.contains("joint");
        const bool has_bayes = doc.contains("bayes");
        if (has_joint == has_bayes) throw InputError("model needs exactly one of \"joint\" or \"bayes\"");
        if (has_joint) return joint_from(domain, doc.at("joint"));
        return multiply_out(bayes_from(domain, doc.at("bayes")));
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid model JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid model: ") + e.what());
    } catch (const std::overflow_error& e) {
        throw InputError(std::string("invalid model: ") + e.what());
    }
}

JointTable parse_model_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open model '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

namespace {

json variables_json(const Domain& domain) {
    json vars = json::array();
    for (const auto& v : domain.variables()) vars.push_back({{"name", v.name}, {"cardinality", v.cardinality}});
    return vars;
}

}  // namespace

std::string joint_to_json(const JointTable& joint, std::string_view name) {
    json doc;
    if (!name.empty()) doc["name"] = name;
    doc["variables"] = variables_json(joint.domain());
    json entries = json::array();
    for (std::size_t code = 0; code < joint.size(); ++code) {
        entries.push_back({{"assignment", joint.domain().decode(code)}, {"p", joint.probability(code)}});
    }
    doc["joint"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::string bayes_to_json(const BayesSpec& spec, std::string_view name) {
    json doc;
    if (!name.empty()) doc["name"] = name;
    doc["variables"] = variables_json(spec.domain);
    json nodes = json::array();
    for (const auto& n : spec.nodes) {
        nodes.push_back({{"name", spec.domain[n.variable].name},
                         {"parents", spec.domain.names_of(n.parents)},
                         {"cpt", n.rows}});
    }
    doc["bayes"] = {{"nodes", std::move(nodes)}};
    return doc.dump(2) + "\n";
}

JointTable load_model(std::string_view name_or_path) {
    if (name_or_path == "table1") return table1_model();
    if (name_or_path == "music-box" || name_or_path == "music_box") return music_box_model();
    return parse_model_json(std::filesystem::path(name_or_path));
}

}  // namespace pilearn
