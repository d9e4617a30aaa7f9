#include <pilearn/dot.hpp>

#include <pilearn/error.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pilearn {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string render(const Graph& g, const Domain& domain, const std::vector<ColoredLink>* colors) {
    if (g.node_count() != domain.size()) throw std::invalid_argument("graph and domain sizes differ");
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& v : domain.variables()) out << "  " << quoted(v.name) << ";\n";
    const auto links = g.links();
    for (std::size_t k = 0; k < links.size(); ++k) {
        out << "  " << quoted(domain[links[k].u].name) << " -- " << quoted(domain[links[k].v].name);
        if (colors && (*colors)[k].color == LinkColor::colored) out << " [style=dotted]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

void write(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write DOT file '" + path.string() + "'");
    out << text;
    if (!out) throw InputError("failed writing DOT file '" + path.string() + "'");
}

}  // namespace

std::string to_dot(const Graph& g, const Domain& domain) { return render(g, domain, nullptr); }

std::string to_dot(const ColoredGraph& g, const Domain& domain) {
    if (g.links.size() != g.graph.link_count()) throw std::invalid_argument("coloring does not cover the graph");
    return render(g.graph, domain, &g.links);
}

void export_dot(const Graph& g, const Domain& domain, const std::filesystem::path& path) {
    write(to_dot(g, domain), path);
}

void export_dot(const ColoredGraph& g, const Domain& domain, const std::filesystem::path& path) {
    write(to_dot(g, domain), path);
}

}  // namespace pilearn
