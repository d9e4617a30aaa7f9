#include <pilearn/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pilearn {

LinkSet make_link_set(std::vector<Link> links) {
    std::sort(links.begin(), links.end());
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (links[i].u == links[i].v) throw std::invalid_argument("self-loop in link set");
        if (i > 0 && links[i] == links[i - 1]) throw std::invalid_argument("duplicate link in link set");
    }
    return links;
}

std::vector<std::size_t> endpoints(std::span<const Link> links) {
    std::vector<std::size_t> out;
    out.reserve(links.size() * 2);
    for (const auto& l : links) {
        out.push_back(l.u);
        out.push_back(l.v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph::Graph(std::size_t nodes) : n_(nodes), adj_(nodes * nodes, 0) {}

Graph::Graph(std::size_t nodes, std::span<const Link> links) : Graph(nodes) { add_links(links); }

Graph Graph::complete(std::size_t nodes) {
    Graph g(nodes);
    for (std::size_t a = 0; a < nodes; ++a)
        for (std::size_t b = a + 1; b < nodes; ++b) g.add_link({a, b});
    return g;
}

void Graph::check_node(std::size_t v) const {
    if (v >= n_) throw std::invalid_argument("node " + std::to_string(v) + " out of range");
}

bool Graph::has_link(std::size_t a, std::size_t b) const {
    check_node(a);
    check_node(b);
    return adj_[a * n_ + b] != 0;
}

void Graph::add_link(const Link& l) {
    check_node(l.u);
    check_node(l.v);
    if (l.u == l.v) throw std::invalid_argument("self-loops are not allowed");
    if (adj_[l.u * n_ + l.v]) {
        throw std::invalid_argument("link (" + std::to_string(l.u) + "," + std::to_string(l.v) + ") already present");
    }
    adj_[l.u * n_ + l.v] = adj_[l.v * n_ + l.u] = 1;
    ++m_;
}

void Graph::add_links(std::span<const Link> links) {
    for (const auto& l : links) add_link(l);
}

void Graph::remove_link(const Link& l) {
    if (!has_link(l)) throw std::invalid_argument("link not present");
    adj_[l.u * n_ + l.v] = adj_[l.v * n_ + l.u] = 0;
    --m_;
}

LinkSet Graph::links() const {
    LinkSet out;
    out.reserve(m_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
            if (adj_[a * n_ + b]) out.emplace_back(a, b);
    return out;
}

LinkSet Graph::non_links() const {
    LinkSet out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
            if (!adj_[a * n_ + b]) out.emplace_back(a, b);
    return out;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    check_node(v);
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < n_; ++w)
        if (adj_[v * n_ + w]) out.push_back(w);
    return out;
}

std::size_t Graph::degree(std::size_t v) const {
    check_node(v);
    return static_cast<std::size_t>(std::count(adj_.begin() + v * n_, adj_.begin() + (v + 1) * n_, 1));
}

std::vector<std::vector<std::size_t>> Graph::components() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(n_, false);
    for (std::size_t s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            const auto v = comp[k];
            for (std::size_t w = 0; w < n_; ++w) {
                if (adj_[v * n_ + w] && !seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace pilearn
