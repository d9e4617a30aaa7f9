#include <pilearn/generators.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pilearn {

JointTable multiply_out(const BayesSpec& spec) {
    const auto& dom = spec.domain;
    const auto n = dom.size();
    if (n == 0) throw std::invalid_argument("Bayesian network has no variables");

    std::vector<const BayesNode*> node_of(n, nullptr);
    for (const auto& node : spec.nodes) {
        if (node.variable >= n) throw std::invalid_argument("node refers to an unknown variable");
        if (node_of[node.variable]) {
            throw std::invalid_argument("variable '" + dom[node.variable].name + "' has two tables");
        }
        node_of[node.variable] = &node;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!node_of[v]) throw std::invalid_argument("variable '" + dom[v].name + "' has no table");
        const auto& node = *node_of[v];
        if (!node.parents.empty()) check_subset(dom, node.parents);
        if (std::find(node.parents.begin(), node.parents.end(), v) != node.parents.end()) {
            throw std::invalid_argument("variable '" + dom[v].name + "' is its own parent");
        }
        if (node.rows.size() != dom.state_count(node.parents)) {
            throw std::invalid_argument("table for '" + dom[v].name + "' has " + std::to_string(node.rows.size()) +
                                        " rows, expected " + std::to_string(dom.state_count(node.parents)));
        }
        for (const auto& row : node.rows) {
            if (row.size() != dom[v].cardinality) {
                throw std::invalid_argument("table row for '" + dom[v].name + "' has the wrong width");
            }
            double total = 0.0;
            for (double p : row) {
                if (!(p >= 0.0) || !std::isfinite(p)) {
                    throw std::invalid_argument("negative probability in table for '" + dom[v].name + "'");
                }
                total += p;
            }
            if (std::abs(total - 1.0) > kMassTolerance) {
                throw std::invalid_argument("table row for '" + dom[v].name + "' does not sum to 1");
            }
        }
    }

    // Kahn's algorithm, only to reject cycles.
    std::vector<std::size_t> pending(n, 0);
    for (std::size_t v = 0; v < n; ++v) pending[v] = node_of[v]->parents.size();
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (pending[v] == 0) ready.push_back(v);
    std::size_t done = 0;
    while (!ready.empty()) {
        const auto v = ready.back();
        ready.pop_back();
        ++done;
        for (std::size_t w = 0; w < n; ++w) {
            const auto& ps = node_of[w]->parents;
            if (std::find(ps.begin(), ps.end(), v) != ps.end() && --pending[w] == 0) ready.push_back(w);
        }
    }
    if (done != n) throw std::invalid_argument("Bayesian network parent structure is cyclic");

    std::vector<double> p(dom.state_count());
    for (std::size_t code = 0; code < p.size(); ++code) {
        const auto values = dom.decode(code);
        double prob = 1.0;
        for (std::size_t v = 0; v < n && prob > 0.0; ++v) {
            const auto& node = *node_of[v];
            std::size_t row = 0;
            for (auto parent : node.parents) row = row * dom[parent].cardinality + values[parent];
            prob *= node.rows[row][values[v]];
        }
        p[code] = prob;
    }
    // Products of exact rows can drift by a few ulps; renormalize.
    double total = 0.0;
    for (double x : p) total += x;
    for (double& x : p) x /= total;
    return JointTable(dom, std::move(p));
}

JointTable table1_model() {
    Domain dom({{"d", 2}, {"a", 2}, {"b", 2}, {"c", 2}});
    // rows in (d, a, b, c) code order
    std::vector<double> p = {0.02, 0.02, 0.06, 0.00, 0.10, 0.06, 0.14, 0.10,
                             0.03, 0.01, 0.01, 0.05, 0.09, 0.07, 0.15, 0.09};
    return JointTable(std::move(dom), std::move(p));
}

BayesSpec music_box_spec() {
    BayesSpec spec;
    spec.domain = Domain({{"ball1", 2},
                          {"ball2", 2},
                          {"ball3", 2},
                          {"light1", 2},
                          {"light2", 2},
                          {"music_box", 2},
                          {"dog", 2},
                          {"John", 2}});
    enum : std::size_t { ball1, ball2, ball3, light1, light2, music_box, dog, john };

    const std::vector<double> off{1.0, 0.0};
    const std::vector<double> on{0.0, 1.0};

    spec.nodes.push_back({ball1, {}, {{0.8, 0.2}}});
    spec.nodes.push_back({ball2, {}, {{0.4, 0.6}}});
    spec.nodes.push_back({ball3, {}, {{0.5, 0.5}}});
    spec.nodes.push_back({light1, {}, {{0.5, 0.5}}});
    spec.nodes.push_back({light2, {}, {{0.5, 0.5}}});

    // plays iff the number of white balls is odd (one or three)
    BayesNode box{music_box, {ball1, ball2, ball3}, {}};
    for (unsigned k = 0; k < 8; ++k) {
        const unsigned whites = (k >> 2 & 1U) + (k >> 1 & 1U) + (k & 1U);
        box.rows.push_back(whites % 2 == 1 ? on : off);
    }
    spec.nodes.push_back(std::move(box));

    // barks iff both lights on or both off
    BayesNode barks{dog, {light1, light2}, {}};
    for (unsigned k = 0; k < 4; ++k) barks.rows.push_back((k >> 1 & 1U) == (k & 1U) ? on : off);
    spec.nodes.push_back(std::move(barks));

    // complains when too quiet (neither) or too noisy (both)
    BayesNode complains{john, {music_box, dog}, {}};
    for (unsigned k = 0; k < 4; ++k) complains.rows.push_back((k >> 1 & 1U) == (k & 1U) ? on : off);
    spec.nodes.push_back(std::move(complains));
    return spec;
}

JointTable music_box_model() { return multiply_out(music_box_spec()); }

Dataset sample_joint(const JointTable& joint, std::size_t n, std::uint64_t seed) {
    const auto p = joint.probabilities();
    std::vector<double> cumulative(p.size());
    double running = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        running += p[k];
        cumulative[k] = running;
        if (p[k] > 0.0) last_positive = k;
    }

    const auto& dom = joint.domain();
    std::vector<State> values;
    values.reserve(n * dom.size());
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        auto code = static_cast<std::size_t>(it - cumulative.begin());
        // rounding in the running sum can leave u past the last cell
        code = std::min(code, last_positive);
        const auto assignment = dom.decode(code);
        values.insert(values.end(), assignment.begin(), assignment.end());
    }
    return Dataset(dom, std::move(values));
}

}  // namespace pilearn
