#include <pilearn/entropy.hpp>

#include <pilearn/junction_tree.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pilearn {

double shannon_entropy(std::span<const double> p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log(x);
    }
    return h;
}

double shannon_entropy(const DistributionTable& d) { return shannon_entropy(d.probabilities()); }

Graph with_links(const Graph& g, std::span<const Link> links) {
    Graph out = g;
    out.add_links(links);
    return out;
}

std::size_t EntropyEvaluator::KeyHash::operator()(const Key& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : k) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

EntropyEvaluator::EntropyEvaluator(ProbabilitySource source) : source_(std::move(source)) {}

double EntropyEvaluator::subset_entropy(std::span<const std::size_t> subset) {
    if (subset.empty()) return 0.0;
    const auto n = source_.domain().size();
    Key key((n + 63) / 64, 0);
    for (auto v : subset) {
        if (v >= n) throw std::invalid_argument("unknown variable index " + std::to_string(v));
        key[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    std::vector<std::size_t> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = shannon_entropy(marginal(source_, std::span<const std::size_t>(sorted)));
    cache_.emplace(std::move(key), h);
    return h;
}

double EntropyEvaluator::mutual_information(std::size_t x, std::size_t y) {
    const std::size_t xs[] = {x};
    const std::size_t ys[] = {y};
    const std::size_t both[] = {x, y};
    return subset_entropy(xs) + subset_entropy(ys) - subset_entropy(both);
}

double EntropyEvaluator::dmn_entropy(const Graph& g) {
    if (g.node_count() != source_.domain().size()) {
        throw std::invalid_argument("graph and probability source have different variable counts");
    }
    const auto tree = build_junction_tree(g);
    double h = 0.0;
    for (const auto& c : tree.cliques) h += subset_entropy(c);
    for (const auto& e : tree.edges) h -= subset_entropy(e.separator);
    return h;
}

double EntropyEvaluator::entropy_decrement(const Graph& g, std::span<const Link> links) {
    const auto before = dmn_entropy(g);
    return before - dmn_entropy(with_links(g, links));
}

double EntropyEvaluator::component_entropy(const Graph& g, std::span<const std::size_t> nodes) {
    // Entropy of the DMN restricted to one component: cliques of the induced
    // subgraph are cliques of g lying inside the component.
    Graph sub(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (g.has_link(nodes[a], nodes[b])) sub.add_link({a, b});
    const auto tree = build_junction_tree(sub);
    auto lift = [&](const Clique& c) {
        std::vector<std::size_t> out;
        out.reserve(c.size());
        for (auto v : c) out.push_back(nodes[v]);
        return out;
    };
    double h = 0.0;
    for (const auto& c : tree.cliques) h += subset_entropy(lift(c));
    for (const auto& e : tree.edges) h -= subset_entropy(lift(e.separator));
    return h;
}

double EntropyEvaluator::local_entropy_decrement(const Graph& g, std::span<const Link> links) {
    if (g.node_count() != source_.domain().size()) {
        throw std::invalid_argument("graph and probability source have different variable counts");
    }
    const Graph g_star = with_links(g, links);
    const auto touched = endpoints(links);

    double before = 0.0, after = 0.0;
    std::vector<bool> counted(g.node_count(), false);
    for (const auto& comp : g_star.components()) {
        if (std::none_of(touched.begin(), touched.end(),
                         [&](auto v) { return std::binary_search(comp.begin(), comp.end(), v); })) {
            continue;
        }
        after += component_entropy(g_star, comp);
        for (auto v : comp) counted[v] = true;
    }
    // components of g merged into the touched components of g*
    for (const auto& comp : g.components()) {
        if (counted[comp.front()]) before += component_entropy(g, comp);
    }
    return before - after;
}

double dmn_entropy(const Graph& g, const ProbabilitySource& source) {
    EntropyEvaluator eval(source);
    return eval.dmn_entropy(g);
}

double entropy_decrement(const Graph& g, std::span<const Link> links, const ProbabilitySource& source) {
    EntropyEvaluator eval(source);
    return eval.entropy_decrement(g, links);
}

}  // namespace pilearn
