#pragma once

#include <pilearn/graph.hpp>
#include <pilearn/probability_source.hpp>

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace pilearn {

// All entropies are in nats; thresholds on decrements are in the same unit.

/// -sum p ln p, with 0 ln 0 = 0.
double shannon_entropy(const DistributionTable& d);
double shannon_entropy(std::span<const double> p);

/// Memoized subset entropies over one probability source.
///
/// Not thread-safe: the cache is mutated on lookup. Give each thread its own
/// evaluator (they may share the source).
class EntropyEvaluator {
public:
    explicit EntropyEvaluator(ProbabilitySource source);

    const ProbabilitySource& source() const noexcept { return source_; }

    /// Entropy of the marginal over `subset` (order irrelevant). Empty subset -> 0.
    double subset_entropy(std::span<const std::size_t> subset);

    double mutual_information(std::size_t x, std::size_t y);

    /// Sum of clique entropies minus separator entropies over the junction
    /// forest. Throws std::invalid_argument if g is not chordal.
    double dmn_entropy(const Graph& g);

    /// dmn_entropy(g) - dmn_entropy(g + links), computed globally.
    double entropy_decrement(const Graph& g, std::span<const Link> links);

    /// Same value as entropy_decrement, evaluated only over the connected
    /// components of g + links that contain a new link.
    double local_entropy_decrement(const Graph& g, std::span<const Link> links);

    std::size_t cached_subsets() const noexcept { return cache_.size(); }

private:
    using Key = std::vector<std::uint64_t>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    double component_entropy(const Graph& g, std::span<const std::size_t> nodes);

    ProbabilitySource source_;
    std::unordered_map<Key, double, KeyHash> cache_;
};

double dmn_entropy(const Graph& g, const ProbabilitySource& source);
double entropy_decrement(const Graph& g, std::span<const Link> links, const ProbabilitySource& source);

/// g with `links` added; throws std::invalid_argument if any link is already present.
Graph with_links(const Graph& g, std::span<const Link> links);

}  // namespace pilearn
