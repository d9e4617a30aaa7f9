#pragma once

#include <pilearn/graph.hpp>
#include <pilearn/joint_table.hpp>
#include <pilearn/probability_source.hpp>

#include <optional>
#include <span>
#include <string_view>
#include <vector>

// Brute-force checks of pseudo-independence properties on exact joints.
// Everything here enumerates subsets and full marginal tables; it is meant
// for domains of roughly ten variables or fewer.

namespace pilearn {

inline constexpr double kExactTolerance = 1e-9;

/// P(a, b | given) == P(a | given) P(b | given) wherever P(given) > 0.
/// Throws std::invalid_argument if a or b is empty or the three sets overlap.
bool subset_independent(const JointTable& joint, std::span<const std::size_t> a, std::span<const std::size_t> b,
                        std::span<const std::size_t> given, double tol = kExactTolerance);

/// The marginal over `subset` equals the product of its singleton marginals.
bool variables_marginally_independent(const JointTable& joint, std::span<const std::size_t> subset,
                                      double tol = kExactTolerance);

/// No non-empty proper A of `subset` is marginally independent of the rest.
bool generally_dependent(const JointTable& joint, std::span<const std::size_t> subset,
                         double tol = kExactTolerance);

/// For every non-empty proper A and every proper C of subset \ A (C may be
/// empty), A is dependent on (subset \ A) \ C given C.
bool collectively_dependent(const JointTable& joint, std::span<const std::size_t> subset,
                            double tol = kExactTolerance);

/// Disjoint blocks, each sorted by variable index, ordered by first member.
struct PIPartition {
    std::vector<std::vector<std::size_t>> blocks;

    bool operator==(const PIPartition&) const = default;
};

enum class PIVerdict { none, partial, full };
std::string_view to_string(PIVerdict verdict);

struct PIClassification {
    PIVerdict verdict = PIVerdict::none;
    /// Singletons for a full PI subset; dependence components for a partial one.
    std::optional<PIPartition> witness;
    std::vector<std::size_t> subset;
};

/// Throws std::invalid_argument when |subset| < 3.
PIClassification classify_pi(const JointTable& joint, std::span<const std::size_t> subset,
                             double tol = kExactTolerance);

struct EmbeddedSubmodel {
    std::vector<std::size_t> subset;  // sorted
    PIVerdict verdict = PIVerdict::none;
    PIPartition partition;  // witness over `subset`
    PIPartition extension;  // the partition grown to cover every variable

    /// Links between distinct blocks of the witness partition.
    LinkSet colored_links() const;
};

struct EmbeddedSearchOptions {
    /// Drop subsets whose collective dependence is carried by a single outside
    /// variable Z: some non-empty proper A is independent of the rest given Z.
    /// Such subsets need not be complete in a minimal I-map (e.g. a parity
    /// variable hidden behind a deterministic child).
    bool exclude_mediated = true;
    double tolerance = kExactTolerance;
};

/// Proper subsets with 3 <= size <= max_size that form a PI model whose
/// partition extends to the whole domain with cross-block pairwise
/// independence. Ordered by size, then lexicographically.
/// Throws std::invalid_argument when max_size < 3.
std::vector<EmbeddedSubmodel> find_embedded_pi_submodels(const JointTable& joint, std::size_t max_size,
                                                         const EmbeddedSearchOptions& options = {});

/// True when every submodel becomes learnable by k-link lookahead once the
/// colored links of already-learnable submodels are counted as learned.
bool lookahead_bound_satisfied(std::span<const EmbeddedSubmodel> submodels, std::size_t k);

/// DMN entropy of chordal g equals the joint entropy (zero KL divergence).
bool is_imap_by_entropy(const Graph& g, const JointTable& joint, double tol = kExactTolerance);

/// Every separation in g holds as a conditional independence in the joint.
/// Works for any graph; exponential in the number of variables (max 16).
bool is_imap_by_separation(const Graph& g, const JointTable& joint, double tol = kExactTolerance);

/// Entropy test; for domains of at most 8 variables the separation test runs
/// too and a disagreement throws InvariantError.
/// Throws std::invalid_argument if g is not chordal.
bool is_imap(const Graph& g, const JointTable& joint);

/// I-map from which no single link can be removed while staying an I-map.
bool is_minimal_imap(const Graph& g, const JointTable& joint);

enum class LinkColor { black, colored };
std::string_view to_string(LinkColor color);

struct ColoredLink {
    Link link;
    LinkColor color = LinkColor::black;

    bool operator==(const ColoredLink&) const = default;
};

struct ColoredGraph {
    Graph graph;
    std::vector<ColoredLink> links;  // canonical link order

    LinkSet colored() const;
    LinkSet black() const;
};

/// Within each maximal clique, nodes are grouped by pairwise dependence
/// (mutual information > delta); links across groups are colored. A link in
/// several cliques is colored if any clique colors it.
ColoredGraph color_links(const Graph& g, const ProbabilitySource& source, double delta);

}  // namespace pilearn
