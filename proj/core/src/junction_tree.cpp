#include <pilearn/junction_tree.hpp>

#include <algorithm>
#include <numeric>
#include <tuple>

namespace pilearn {

std::size_t JunctionTree::max_clique_size() const {
    std::size_t best = 0;
    for (const auto& c : cliques) best = std::max(best, c.size());
    return best;
}

JunctionTree build_junction_tree(const Graph& g) {
    JunctionTree tree;
    tree.cliques = maximal_cliques(g);
    const auto& cl = tree.cliques;

    struct Candidate {
        std::size_t weight, a, b;
        Clique separator;
    };
    std::vector<Candidate> candidates;
    for (std::size_t a = 0; a < cl.size(); ++a) {
        for (std::size_t b = a + 1; b < cl.size(); ++b) {
            Clique sep;
            std::set_intersection(cl[a].begin(), cl[a].end(), cl[b].begin(), cl[b].end(), std::back_inserter(sep));
            if (!sep.empty()) candidates.push_back({sep.size(), a, b, std::move(sep)});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        return std::tie(y.weight, x.a, x.b) < std::tie(x.weight, y.a, y.b);
    });

    // Kruskal; zero-weight pairs are never joined, so components stay separate trees.
    std::vector<std::size_t> parent(cl.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& c : candidates) {
        const auto ra = root(c.a), rb = root(c.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        tree.edges.push_back({c.a, c.b, std::move(c.separator)});
    }
    return tree;
}

bool has_running_intersection(const JunctionTree& tree, std::size_t node_count) {
    for (std::size_t v = 0; v < node_count; ++v) {
        std::vector<std::size_t> holding;
        for (std::size_t k = 0; k < tree.cliques.size(); ++k) {
            const auto& c = tree.cliques[k];
            if (std::binary_search(c.begin(), c.end(), v)) holding.push_back(k);
        }
        if (holding.size() <= 1) continue;
        // BFS over tree edges whose separators contain v
        std::vector<bool> reached(tree.cliques.size(), false);
        std::vector<std::size_t> queue{holding.front()};
        reached[holding.front()] = true;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            for (const auto& e : tree.edges) {
                if (!std::binary_search(e.separator.begin(), e.separator.end(), v)) continue;
                std::size_t next = tree.cliques.size();
                if (e.a == queue[q]) next = e.b;
                if (e.b == queue[q]) next = e.a;
                if (next < tree.cliques.size() && !reached[next]) {
                    reached[next] = true;
                    queue.push_back(next);
                }
            }
        }
        for (auto k : holding)
            if (!reached[k]) return false;
    }
    return true;
}

}  // namespace pilearn
