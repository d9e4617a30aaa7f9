#include <pilearn/chordal.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pilearn {

namespace {

// Neighbors of each node visited before it in `order`.
std::vector<std::vector<std::size_t>> earlier_neighbors(const Graph& g, const std::vector<std::size_t>& order,
                                                        std::vector<std::size_t>& position) {
    const auto n = g.node_count();
    position.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
    std::vector<std::vector<std::size_t>> earlier(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (w != v && g.has_link(v, w) && position[w] < position[v]) earlier[v].push_back(w);
        }
    }
    return earlier;
}

bool is_perfect_elimination(const std::vector<std::vector<std::size_t>>& earlier,
                            const std::vector<std::size_t>& position) {
    for (std::size_t v = 0; v < earlier.size(); ++v) {
        const auto& ev = earlier[v];
        if (ev.size() < 2) continue;
        const auto follower =
            *std::max_element(ev.begin(), ev.end(), [&](auto a, auto b) { return position[a] < position[b]; });
        const auto& ef = earlier[follower];
        for (auto w : ev) {
            if (w != follower && std::find(ef.begin(), ef.end(), w) == ef.end()) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::size_t> maximum_cardinality_order(const Graph& g) {
    const auto n = g.node_count();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
        }
        visited[best] = true;
        order.push_back(best);
        for (std::size_t w = 0; w < n; ++w) {
            if (!visited[w] && g.has_link(best, w)) ++weight[w];
        }
    }
    return order;
}

bool is_chordal(const Graph& g) {
    const auto order = maximum_cardinality_order(g);
    std::vector<std::size_t> position;
    const auto earlier = earlier_neighbors(g, order, position);
    return is_perfect_elimination(earlier, position);
}

std::vector<Clique> maximal_cliques(const Graph& g) {
    const auto order = maximum_cardinality_order(g);
    std::vector<std::size_t> position;
    const auto earlier = earlier_neighbors(g, order, position);
    if (!is_perfect_elimination(earlier, position)) {
        throw std::invalid_argument("maximal_cliques requires a chordal graph");
    }
    // Each node with its earlier neighbours is a clique; the maximal ones are
    // exactly those not contained in another such candidate.
    std::vector<Clique> candidates;
    candidates.reserve(g.node_count());
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        Clique c = earlier[v];
        c.push_back(v);
        std::sort(c.begin(), c.end());
        candidates.push_back(std::move(c));
    }
    std::sort(candidates.begin(), candidates.end(), [](const Clique& a, const Clique& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<Clique> out;
    for (auto& c : candidates) {
        const bool covered = std::any_of(out.begin(), out.end(), [&](const Clique& m) {
            return std::includes(m.begin(), m.end(), c.begin(), c.end());
        });
        if (!covered) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool implied_by_single_clique(const Graph& g_star, std::span<const Link> links) {
    const auto ends = endpoints(links);
    for (const auto& c : maximal_cliques(g_star)) {
        if (std::includes(c.begin(), c.end(), ends.begin(), ends.end())) return true;
    }
    return false;
}

bool endpoints_form_clique(const Graph& g, std::span<const Link> links) {
    const auto ends = endpoints(links);
    for (std::size_t a = 0; a < ends.size(); ++a)
        for (std::size_t b = a + 1; b < ends.size(); ++b)
            if (!g.has_link(ends[a], ends[b])) return false;
    return true;
}

std::size_t for_each_candidate(const Graph& g, std::size_t i,
                               const std::function<void(std::span<const Link>)>& visit) {
    if (i == 0) throw std::invalid_argument("lookahead size must be at least 1");
    const auto pool = g.non_links();
    if (i > pool.size()) return 0;

    std::vector<std::size_t> pick(i);
    for (std::size_t k = 0; k < i; ++k) pick[k] = k;
    std::vector<Link> current(i);
    std::size_t visited = 0;
    while (true) {
        for (std::size_t k = 0; k < i; ++k) current[k] = pool[pick[k]];
        visit(current);
        ++visited;
        // advance to the next combination in lexicographic order
        std::size_t k = i;
        while (k > 0 && pick[k - 1] == pool.size() - i + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t r = k; r < i; ++r) pick[r] = pick[r - 1] + 1;
    }
    return visited;
}

std::vector<LinkSet> enumerate_candidates(const Graph& g, std::size_t i) {
    std::vector<LinkSet> out;
    for_each_candidate(g, i, [&](std::span<const Link> l) { out.emplace_back(l.begin(), l.end()); });
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        const auto num = n - k + j;
        // result * num / j is exact at every step; guard the multiplication
        if (result > std::numeric_limits<std::size_t>::max() / num) return std::numeric_limits<std::size_t>::max();
        result = result * num / j;
    }
    return result;
}

}  // namespace pilearn
