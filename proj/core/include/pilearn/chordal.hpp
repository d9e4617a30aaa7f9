#pragma once

#include <pilearn/graph.hpp>

#include <functional>
#include <span>
#include <vector>

namespace pilearn {

/// Sorted list of node indices.
using Clique = std::vector<std::size_t>;

/// Maximum cardinality search visit order (ties to the smallest index).
/// The reverse of a chordal graph's visit order is a perfect elimination ordering.
std::vector<std::size_t> maximum_cardinality_order(const Graph& g);

/// True iff every cycle of length >= 4 has a chord.
bool is_chordal(const Graph& g);

/// Maximal cliques of a chordal graph, sorted lexicographically.
/// Throws std::invalid_argument on non-chordal input.
std::vector<Clique> maximal_cliques(const Graph& g);

/// True iff one maximal clique of `g_star` covers every endpoint of `links`.
bool implied_by_single_clique(const Graph& g_star, std::span<const Link> links);

/// Equivalent to implied_by_single_clique when the links are present in `g`:
/// the endpoints must be pairwise adjacent, which is cheaper to test.
bool endpoints_form_clique(const Graph& g, std::span<const Link> links);

/// All i-subsets of g's non-links, lexicographic over canonical link lists.
/// No legality filtering is applied.
std::vector<LinkSet> enumerate_candidates(const Graph& g, std::size_t i);

/// Streaming form of enumerate_candidates. Returns the number of sets visited.
std::size_t for_each_candidate(const Graph& g, std::size_t i,
                               const std::function<void(std::span<const Link>)>& visit);

/// C(n, k), saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace pilearn
