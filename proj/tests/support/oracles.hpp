#pragma once

#include <pilearn/graph.hpp>
#include <pilearn/joint_table.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace pilearn::testing {

// Brute-force references that share no code paths with the library algorithms.

/// Marginal over `subset` by summing every joint cell; first variable most significant.
std::vector<double> brute_marginal(const JointTable& joint, const std::vector<std::size_t>& subset);
double brute_entropy(const JointTable& joint, const std::vector<std::size_t>& subset);
/// Sum of p(x,y) log(p(x,y) / (p(x) p(y))).
double brute_mutual_information(const JointTable& joint, std::size_t x, std::size_t y);
/// max |P(a,b,c) P(c) - P(a,c) P(b,c)| over all cells.
double brute_ci_gap(const JointTable& joint, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                    const std::vector<std::size_t>& given);

/// No induced cycle of length four or more; exponential in the node count.
bool brute_is_chordal(const Graph& g);
/// Every inclusion-maximal clique, each sorted, list sorted.
std::vector<std::vector<std::size_t>> brute_maximal_cliques(const Graph& g);
/// Chain-rule entropy along a perfect elimination order found by repeated simplicial removal.
double chain_rule_entropy(const Graph& g, const JointTable& joint);

/// Uniformly drawn cardinalities in [2, max_card] and a random strictly positive joint.
JointTable random_joint(std::size_t n, std::size_t max_card, std::mt19937_64& rng);
/// Independent product of random marginals.
JointTable product_joint(std::size_t n, std::size_t max_card, std::mt19937_64& rng);
/// Random chordal graph grown by accepting random links that keep it chordal.
Graph random_chordal_graph(std::size_t n, std::size_t attempts, std::mt19937_64& rng);
Graph random_graph(std::size_t n, double density, std::mt19937_64& rng);

}  // namespace pilearn::testing
