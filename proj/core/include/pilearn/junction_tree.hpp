#pragma once

#include <pilearn/chordal.hpp>

#include <vector>

namespace pilearn {

struct JunctionTreeEdge {
    std::size_t a = 0;  // clique indices, a < b
    std::size_t b = 0;
    Clique separator;

    bool operator==(const JunctionTreeEdge&) const = default;
};

/// Clique forest of a chordal graph: one tree per connected component.
struct JunctionTree {
    std::vector<Clique> cliques;
    std::vector<JunctionTreeEdge> edges;

    std::size_t max_clique_size() const;
    bool operator==(const JunctionTree&) const = default;
};

/// Maximum-weight spanning forest over the maximal cliques, weighted by
/// intersection size. Ties go to the lexicographically smaller clique pair.
/// Throws std::invalid_argument on non-chordal input.
JunctionTree build_junction_tree(const Graph& g);

/// Checks that every node's cliques induce a connected subtree.
bool has_running_intersection(const JunctionTree& tree, std::size_t node_count);

}  // namespace pilearn
