#include <pilearn/pi_oracle.hpp>

#include <pilearn/chordal.hpp>
#include <pilearn/entropy.hpp>
#include <pilearn/error.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pilearn {

namespace {

using Members = std::vector<std::size_t>;

Members concat(std::span<const std::size_t> x, std::span<const std::size_t> y) {
    Members out(x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

// Members of `set` selected by the bits of `mask`.
Members pick(std::span<const std::size_t> set, std::uint64_t mask) {
    Members out;
    for (std::size_t k = 0; k < set.size(); ++k)
        if (mask >> k & 1U) out.push_back(set[k]);
    return out;
}

void check_small(std::span<const std::size_t> subset) {
    if (subset.size() > 20) throw std::invalid_argument("subset too large for brute-force enumeration");
}

// Union-find grouping of `nodes` under a symmetric relation.
template <typename Related>
std::vector<Members> group(std::span<const std::size_t> nodes, Related related) {
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (related(nodes[a], nodes[b])) parent[root(a)] = root(b);

    std::vector<Members> blocks;
    std::vector<std::size_t> block_of(nodes.size(), nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        const auto r = root(a);
        if (block_of[r] == nodes.size()) {
            block_of[r] = blocks.size();
            blocks.emplace_back();
        }
        blocks[block_of[r]].push_back(nodes[a]);
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

bool pair_independent(const JointTable& joint, std::size_t x, std::size_t y, double tol) {
    const std::size_t a[] = {x};
    const std::size_t b[] = {y};
    return subset_independent(joint, a, b, {}, tol);
}

// Some variable outside `subset` makes a non-empty proper part independent of the rest.
bool mediated(const JointTable& joint, std::span<const std::size_t> subset, double tol) {
    const auto n = joint.domain().size();
    const std::uint64_t full = (std::uint64_t{1} << subset.size()) - 1;
    for (std::size_t z = 0; z < n; ++z) {
        if (std::find(subset.begin(), subset.end(), z) != subset.end()) continue;
        const std::size_t given[] = {z};
        // A and its complement give the same test; keep masks holding member 0.
        for (std::uint64_t mask = 1; mask < full; mask += 2) {
            if (subset_independent(joint, pick(subset, mask), pick(subset, full & ~mask), given, tol)) return true;
        }
    }
    return false;
}

}  // namespace

bool subset_independent(const JointTable& joint, std::span<const std::size_t> a, std::span<const std::size_t> b,
                        std::span<const std::size_t> given, double tol) {
    if (a.empty() || b.empty()) throw std::invalid_argument("independence test needs non-empty sets");
    const auto abg = concat(concat(a, b), given);
    check_subset(joint.domain(), abg);  // rejects overlaps

    const ProbabilitySource src(joint);
    const auto m_abg = marginal(src, std::span<const std::size_t>(abg));
    const auto ag = concat(a, given);
    const auto bg = concat(b, given);
    const auto m_ag = marginal(src, std::span<const std::size_t>(ag));
    const auto m_bg = marginal(src, std::span<const std::size_t>(bg));
    std::optional<DistributionTable> m_g;
    if (!given.empty()) m_g = marginal(src, given);

    const auto& dom = joint.domain();
    const std::size_t na = dom.state_count(a), nb = dom.state_count(b), ng = dom.state_count(given);
    // abg code = (ia * nb + ib) * ng + ig; ag code = ia * ng + ig; bg code = ib * ng + ig
    for (std::size_t ig = 0; ig < ng; ++ig) {
        const double pg = m_g ? (*m_g)[ig] : 1.0;
        if (!(pg > 0.0)) continue;
        for (std::size_t ia = 0; ia < na; ++ia) {
            const double pa = m_ag[ia * ng + ig] / pg;
            for (std::size_t ib = 0; ib < nb; ++ib) {
                const double pab = m_abg[(ia * nb + ib) * ng + ig] / pg;
                const double pb = m_bg[ib * ng + ig] / pg;
                if (std::abs(pab - pa * pb) > tol) return false;
            }
        }
    }
    return true;
}

bool variables_marginally_independent(const JointTable& joint, std::span<const std::size_t> subset, double tol) {
    check_subset(joint.domain(), subset);
    const ProbabilitySource src(joint);
    const auto m = marginal(src, subset);
    std::vector<DistributionTable> singles;
    for (auto v : subset) {
        const std::size_t one[] = {v};
        singles.push_back(marginal(src, one));
    }
    const auto& cards = m.cardinalities();
    std::vector<State> digits(cards.size(), 0);
    for (std::size_t cell = 0; cell < m.size(); ++cell) {
        double product = 1.0;
        for (std::size_t j = 0; j < digits.size(); ++j) product *= singles[j][digits[j]];
        if (std::abs(m[cell] - product) > tol) return false;
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < cards[j]) break;
            digits[j] = 0;
        }
    }
    return true;
}

bool generally_dependent(const JointTable& joint, std::span<const std::size_t> subset, double tol) {
    check_subset(joint.domain(), subset);
    check_small(subset);
    const std::uint64_t full = (std::uint64_t{1} << subset.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; mask += 2) {
        if (subset_independent(joint, pick(subset, mask), pick(subset, full & ~mask), {}, tol)) return false;
    }
    return true;
}

bool collectively_dependent(const JointTable& joint, std::span<const std::size_t> subset, double tol) {
    check_subset(joint.domain(), subset);
    check_small(subset);
    const std::uint64_t full = (std::uint64_t{1} << subset.size()) - 1;
    for (std::uint64_t a_mask = 1; a_mask < full; ++a_mask) {
        const auto a = pick(subset, a_mask);
        const std::uint64_t rest = full & ~a_mask;
        // every C strictly inside rest, including the empty set
        for (std::uint64_t c_mask = rest;; c_mask = (c_mask - 1) & rest) {
            if (c_mask != rest) {
                if (subset_independent(joint, a, pick(subset, rest & ~c_mask), pick(subset, c_mask), tol)) {
                    return false;
                }
            }
            if (c_mask == 0) break;
        }
    }
    return true;
}

std::string_view to_string(PIVerdict verdict) {
    switch (verdict) {
        case PIVerdict::none: return "none";
        case PIVerdict::partial: return "partial";
        case PIVerdict::full: return "full";
    }
    return "unknown";
}

PIClassification classify_pi(const JointTable& joint, std::span<const std::size_t> subset, double tol) {
    if (subset.size() < 3) throw std::invalid_argument("PI classification needs at least 3 variables");
    check_subset(joint.domain(), subset);

    PIClassification out;
    out.subset.assign(subset.begin(), subset.end());
    if (!collectively_dependent(joint, subset, tol)) return out;

    bool s1 = true;
    for (std::size_t x = 0; x < subset.size() && s1; ++x) {
        Members others;
        for (std::size_t y = 0; y < subset.size(); ++y)
            if (y != x) others.push_back(subset[y]);
        s1 = variables_marginally_independent(joint, others, tol);
    }
    if (s1) {
        PIPartition singletons;
        Members sorted(subset.begin(), subset.end());
        std::sort(sorted.begin(), sorted.end());
        for (auto v : sorted) singletons.blocks.push_back({v});
        out.verdict = PIVerdict::full;
        out.witness = std::move(singletons);
        return out;
    }

    auto blocks = group(subset, [&](std::size_t x, std::size_t y) { return !pair_independent(joint, x, y, tol); });
    if (blocks.size() < 2) return out;
    for (const auto& b : blocks) {
        if (b.size() >= 2 && !generally_dependent(joint, b, tol)) return out;
    }
    out.verdict = PIVerdict::partial;
    out.witness = PIPartition{std::move(blocks)};
    return out;
}

LinkSet EmbeddedSubmodel::colored_links() const {
    LinkSet out;
    const auto& blocks = partition.blocks;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            for (auto x : blocks[i])
                for (auto y : blocks[j]) out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EmbeddedSubmodel> find_embedded_pi_submodels(const JointTable& joint, std::size_t max_size,
                                                         const EmbeddedSearchOptions& options) {
    if (max_size < 3) throw std::invalid_argument("embedded PI submodels have at least 3 variables");
    const auto n = joint.domain().size();
    const double tol = options.tolerance;
    std::vector<EmbeddedSubmodel> out;
    if (n < 4) return out;
    check_small(std::vector<std::size_t>(n));

    std::vector<std::vector<std::uint8_t>> indep(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) indep[x][y] = indep[y][x] = pair_independent(joint, x, y, tol);

    const auto top = std::min(max_size, n - 1);
    for (std::size_t size = 3; size <= top; ++size) {
        // subsets of this size in lexicographic order
        std::vector<std::size_t> subset(size);
        std::iota(subset.begin(), subset.end(), std::size_t{0});
        while (true) {
            auto cls = classify_pi(joint, subset, tol);
            if (cls.verdict != PIVerdict::none && !(options.exclude_mediated && mediated(joint, subset, tol))) {
                auto blocks = cls.witness->blocks;
                bool extends = true;
                for (std::size_t x = 0; x < n && extends; ++x) {
                    if (std::binary_search(subset.begin(), subset.end(), x)) continue;
                    bool placed = false;
                    for (std::size_t bi = 0; bi < blocks.size() && !placed; ++bi) {
                        bool ok = true;
                        for (std::size_t bj = 0; bj < blocks.size() && ok; ++bj) {
                            if (bj == bi) continue;
                            for (auto y : blocks[bj]) {
                                if (!indep[x][y]) {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                        if (ok) {
                            blocks[bi].push_back(x);
                            placed = true;
                        }
                    }
                    extends = placed;
                }
                if (extends) {
                    for (auto& b : blocks) std::sort(b.begin(), b.end());
                    out.push_back({subset, cls.verdict, std::move(*cls.witness), PIPartition{std::move(blocks)}});
                }
            }
            std::size_t k = size;
            while (k > 0 && subset[k - 1] == n - size + (k - 1)) --k;
            if (k == 0) break;
            ++subset[k - 1];
            for (std::size_t r = k; r < size; ++r) subset[r] = subset[r - 1] + 1;
        }
    }
    return out;
}

bool lookahead_bound_satisfied(std::span<const EmbeddedSubmodel> submodels, std::size_t k) {
    std::vector<LinkSet> colored;
    for (const auto& m : submodels) colored.push_back(m.colored_links());
    std::vector<bool> learnable(submodels.size(), false);
    LinkSet learned;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t s = 0; s < submodels.size(); ++s) {
            if (learnable[s]) continue;
            const auto remaining = std::count_if(colored[s].begin(), colored[s].end(), [&](const Link& l) {
                return !std::binary_search(learned.begin(), learned.end(), l);
            });
            if (static_cast<std::size_t>(remaining) <= k) {
                learnable[s] = true;
                progress = true;
                learned.insert(learned.end(), colored[s].begin(), colored[s].end());
                std::sort(learned.begin(), learned.end());
                learned.erase(std::unique(learned.begin(), learned.end()), learned.end());
            }
        }
    }
    return std::all_of(learnable.begin(), learnable.end(), [](bool b) { return b; });
}

bool is_imap_by_entropy(const Graph& g, const JointTable& joint, double tol) {
    const ProbabilitySource src(joint);
    const double h_joint = shannon_entropy(joint.probabilities());
    return std::abs(dmn_entropy(g, src) - h_joint) <= tol;
}

bool is_imap_by_separation(const Graph& g, const JointTable& joint, double tol) {
    const auto n = joint.domain().size();
    if (g.node_count() != n) throw std::invalid_argument("graph and joint have different variable counts");
    if (n > 16) throw std::invalid_argument("separation check limited to 16 variables");

    // For each separator Z, each component K of g - Z must be independent of
    // the remaining non-Z nodes given Z. The semi-graphoid axioms then give
    // every separation statement with separator Z.
    for (std::uint64_t z_mask = 0; z_mask < (std::uint64_t{1} << n); ++z_mask) {
        Members z, free;
        for (std::size_t v = 0; v < n; ++v) (z_mask >> v & 1U ? z : free).push_back(v);
        if (free.size() < 2) continue;
        const auto comps = group(free, [&](std::size_t x, std::size_t y) { return g.has_link(x, y); });
        if (comps.size() < 2) continue;
        for (const auto& k : comps) {
            Members rest;
            std::set_difference(free.begin(), free.end(), k.begin(), k.end(), std::back_inserter(rest));
            if (!subset_independent(joint, k, rest, z, tol)) return false;
        }
    }
    return true;
}

bool is_imap(const Graph& g, const JointTable& joint) {
    if (!is_chordal(g)) throw std::invalid_argument("is_imap requires a chordal graph");
    const bool by_entropy = is_imap_by_entropy(g, joint);
    if (joint.domain().size() <= 8) {
        const bool by_separation = is_imap_by_separation(g, joint);
        if (by_entropy != by_separation) {
            throw InvariantError("entropy and separation I-map tests disagree");
        }
    }
    return by_entropy;
}

bool is_minimal_imap(const Graph& g, const JointTable& joint) {
    if (!is_imap_by_separation(g, joint)) return false;
    for (const auto& l : g.links()) {
        Graph reduced = g;
        reduced.remove_link(l);
        if (is_imap_by_separation(reduced, joint)) return false;
    }
    return true;
}

std::string_view to_string(LinkColor color) { return color == LinkColor::colored ? "colored" : "black"; }

LinkSet ColoredGraph::colored() const {
    LinkSet out;
    for (const auto& l : links)
        if (l.color == LinkColor::colored) out.push_back(l.link);
    return out;
}

LinkSet ColoredGraph::black() const {
    LinkSet out;
    for (const auto& l : links)
        if (l.color == LinkColor::black) out.push_back(l.link);
    return out;
}

ColoredGraph color_links(const Graph& g, const ProbabilitySource& source, double delta) {
    EntropyEvaluator eval(source);
    ColoredGraph out{g, {}};
    const auto all = g.links();
    std::vector<bool> colored(all.size(), false);
    for (const auto& clique : maximal_cliques(g)) {
        const auto blocks =
            group(clique, [&](std::size_t x, std::size_t y) { return eval.mutual_information(x, y) > delta; });
        std::vector<std::size_t> block_of(g.node_count(), 0);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (auto v : blocks[b]) block_of[v] = b;
        for (std::size_t a = 0; a < clique.size(); ++a) {
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                if (block_of[clique[a]] == block_of[clique[b]]) continue;
                const auto pos = std::lower_bound(all.begin(), all.end(), Link(clique[a], clique[b])) - all.begin();
                colored[static_cast<std::size_t>(pos)] = true;
            }
        }
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
        out.links.push_back({all[k], colored[k] ? LinkColor::colored : LinkColor::black});
    }
    return out;
}

}  // namespace pilearn
