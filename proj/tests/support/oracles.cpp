#include "oracles.hpp"

#include <pilearn/chordal.hpp>

#include <algorithm>
#include <cmath>

namespace pilearn::testing {

namespace {

std::size_t cell_of(const Domain& dom, const std::vector<State>& values, const std::vector<std::size_t>& subset) {
    std::size_t cell = 0;
    for (auto v : subset) cell = cell * dom[v].cardinality + values[v];
    return cell;
}

std::size_t cells_of(const Domain& dom, const std::vector<std::size_t>& subset) {
    std::size_t total = 1;
    for (auto v : subset) total *= dom[v].cardinality;
    return total;
}

bool is_clique(const Graph& g, const std::vector<std::size_t>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (!g.has_link(nodes[i], nodes[j])) return false;
        }
    }
    return true;
}

std::vector<std::size_t> members(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1u) out.push_back(v);
    }
    return out;
}

Domain random_domain(std::size_t n, std::size_t max_card, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> card(2, max_card);
    std::vector<std::pair<std::string, std::size_t>> vars;
    for (std::size_t v = 0; v < n; ++v) vars.emplace_back("x" + std::to_string(v), card(rng));
    return Domain(std::move(vars));
}

}  // namespace

std::vector<double> brute_marginal(const JointTable& joint, const std::vector<std::size_t>& subset) {
    const auto& dom = joint.domain();
    std::vector<double> out(cells_of(dom, subset), 0.0);
    const auto& p = joint.probabilities();
    for (std::size_t code = 0; code < p.size(); ++code) {
        out[cell_of(dom, dom.decode(code), subset)] += p[code];
    }
    return out;
}

double brute_entropy(const JointTable& joint, const std::vector<std::size_t>& subset) {
    double h = 0.0;
    for (double q : brute_marginal(joint, subset)) {
        if (q > 0.0) h -= q * std::log(q);
    }
    return h;
}

double brute_mutual_information(const JointTable& joint, std::size_t x, std::size_t y) {
    const auto& dom = joint.domain();
    const auto pxy = brute_marginal(joint, {x, y});
    const auto px = brute_marginal(joint, {x});
    const auto py = brute_marginal(joint, {y});
    const auto cy = dom[y].cardinality;
    double mi = 0.0;
    for (std::size_t i = 0; i < px.size(); ++i) {
        for (std::size_t j = 0; j < py.size(); ++j) {
            const double q = pxy[i * cy + j];
            if (q > 0.0) mi += q * std::log(q / (px[i] * py[j]));
        }
    }
    return mi;
}

double brute_ci_gap(const JointTable& joint, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                    const std::vector<std::size_t>& given) {
    const auto& dom = joint.domain();
    auto abc = a;
    abc.insert(abc.end(), b.begin(), b.end());
    abc.insert(abc.end(), given.begin(), given.end());
    auto ac = a;
    ac.insert(ac.end(), given.begin(), given.end());
    auto bc = b;
    bc.insert(bc.end(), given.begin(), given.end());
    const auto p_abc = brute_marginal(joint, abc);
    const auto p_ac = brute_marginal(joint, ac);
    const auto p_bc = brute_marginal(joint, bc);
    const auto p_c = given.empty() ? std::vector<double>{1.0} : brute_marginal(joint, given);

    double gap = 0.0;
    for (std::size_t code = 0; code < dom.state_count(); ++code) {
        const auto values = dom.decode(code);
        const double lhs = p_abc[cell_of(dom, values, abc)] * p_c[given.empty() ? 0 : cell_of(dom, values, given)];
        const double rhs = p_ac[cell_of(dom, values, ac)] * p_bc[cell_of(dom, values, bc)];
        gap = std::max(gap, std::abs(lhs - rhs));
    }
    return gap;
}

bool brute_is_chordal(const Graph& g) {
    const auto n = g.node_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto nodes = members(mask, n);
        if (nodes.size() < 4) continue;
        bool cycle = true;
        for (auto v : nodes) {
            std::size_t deg = 0;
            for (auto w : nodes) deg += g.has_link(v, w) ? 1 : 0;
            if (deg != 2) {
                cycle = false;
                break;
            }
        }
        if (!cycle) continue;
        // All degrees two: a single cycle exactly when the induced subgraph is connected.
        std::vector<std::size_t> stack{nodes.front()};
        std::uint64_t seen = std::uint64_t{1} << nodes.front();
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : nodes) {
                if (g.has_link(v, w) && !(seen >> w & 1u)) {
                    seen |= std::uint64_t{1} << w;
                    stack.push_back(w);
                }
            }
        }
        if (seen == mask) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> brute_maximal_cliques(const Graph& g) {
    const auto n = g.node_count();
    std::vector<std::uint64_t> cliques;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (is_clique(g, members(mask, n))) cliques.push_back(mask);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto c : cliques) {
        const bool maximal = std::none_of(cliques.begin(), cliques.end(),
                                          [c](std::uint64_t d) { return d != c && (d & c) == c; });
        if (maximal) out.push_back(members(c, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

double chain_rule_entropy(const Graph& g, const JointTable& joint) {
    const auto n = g.node_count();
    std::vector<bool> removed(n, false);
    double h = 0.0;
    for (std::size_t step = 0; step < n; ++step) {
        bool found = false;
        for (std::size_t v = 0; v < n && !found; ++v) {
            if (removed[v]) continue;
            std::vector<std::size_t> nb;
            for (std::size_t w = 0; w < n; ++w) {
                if (!removed[w] && g.has_link(v, w)) nb.push_back(w);
            }
            if (!is_clique(g, nb)) continue;
            auto family = nb;
            family.push_back(v);
            std::sort(family.begin(), family.end());
            h += brute_entropy(joint, family) - (nb.empty() ? 0.0 : brute_entropy(joint, nb));
            removed[v] = true;
            found = true;
        }
        if (!found) throw std::invalid_argument("graph is not chordal");
    }
    return h;
}

JointTable random_joint(std::size_t n, std::size_t max_card, std::mt19937_64& rng) {
    auto dom = random_domain(n, max_card, rng);
    std::exponential_distribution<double> draw(1.0);
    std::vector<double> p(dom.state_count());
    double total = 0.0;
    for (auto& q : p) total += (q = draw(rng) + 1e-3);
    for (auto& q : p) q /= total;
    return JointTable(std::move(dom), std::move(p));
}

JointTable product_joint(std::size_t n, std::size_t max_card, std::mt19937_64& rng) {
    auto dom = random_domain(n, max_card, rng);
    std::uniform_real_distribution<double> draw(0.1, 1.0);
    std::vector<std::vector<double>> marginals;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<double> m(dom[v].cardinality);
        double total = 0.0;
        for (auto& q : m) total += (q = draw(rng));
        for (auto& q : m) q /= total;
        marginals.push_back(std::move(m));
    }
    std::vector<double> p(dom.state_count());
    for (std::size_t code = 0; code < p.size(); ++code) {
        const auto values = dom.decode(code);
        double q = 1.0;
        for (std::size_t v = 0; v < n; ++v) q *= marginals[v][values[v]];
        p[code] = q;
    }
    return JointTable(std::move(dom), std::move(p));
}

Graph random_chordal_graph(std::size_t n, std::size_t attempts, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_int_distribution<std::size_t> node(0, n - 1);
    for (std::size_t t = 0; t < attempts; ++t) {
        const auto a = node(rng);
        const auto b = node(rng);
        if (a == b || g.has_link(a, b)) continue;
        const Link l{std::min(a, b), std::max(a, b)};
        g.add_link(l);
        if (!brute_is_chordal(g)) g.remove_link(l);
    }
    return g;
}

Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution keep(density);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (keep(rng)) g.add_link({a, b});
        }
    }
    return g;
}

}  // namespace pilearn::testing
