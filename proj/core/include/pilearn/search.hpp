#pragma once

#include <pilearn/entropy.hpp>
#include <pilearn/graph.hpp>
#include <pilearn/probability_source.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace pilearn {

enum class SearchMode {
    ml,               // combined k-link search with backtracking to single links
    straightforward,  // lookahead(1), lookahead(2), ..., lookahead(k); no backtracking
    single,           // lookahead(1) only
};

std::string_view to_string(SearchMode mode);
/// Throws std::invalid_argument for anything but "ml", "straightforward", "single".
SearchMode parse_search_mode(std::string_view text);

struct SearchConfig {
    explicit SearchConfig(ProbabilitySource src) : source(std::move(src)) {}

    ProbabilitySource source;
    std::size_t max_links = 1;  // k
    double delta_h = 0.001;     // adoption threshold, nats
    SearchMode mode = SearchMode::ml;
    /// When set, each pass scans candidates in a seeded shuffled order instead
    /// of canonical order. Only tie-breaking among equal scores changes.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Throws std::invalid_argument if k < 1 or delta_h is negative or not finite.
void validate(const SearchConfig& config);

/// One scan over all i-link candidate sets.
struct PassRecord {
    std::size_t level = 0;
    std::size_t candidates_enumerated = 0;  // i-subsets of non-links considered
    std::size_t candidates_evaluated = 0;   // passed chordality + single-clique checks
    std::optional<LinkSet> adopted;
    std::optional<double> decrement;        // set iff adopted
    double best_decrement = 0.0;            // best dh* of the pass, adopted or not
    double entropy_after = 0.0;
    std::size_t cumulative_evaluated = 0;

    bool operator==(const PassRecord&) const = default;
};

struct LearnTrace {
    std::vector<PassRecord> passes;
    double initial_entropy = 0.0;
    double final_entropy = 0.0;
    std::size_t total_enumerated = 0;
    std::size_t total_evaluated = 0;
    std::size_t max_clique_size = 0;  // largest clique of the working graph seen

    std::vector<LinkSet> adoptions() const;
    std::size_t pass_count(std::size_t level) const;

    bool operator==(const LearnTrace&) const = default;
};

struct LearnResult {
    Graph graph;
    LearnTrace trace;
};

/// Working state of a structure search: the current chordal graph, its trace,
/// and a subset-entropy cache shared across passes.
class Learner {
public:
    explicit Learner(SearchConfig config);
    /// Throws std::invalid_argument if `initial` is not chordal or has the wrong size.
    Learner(SearchConfig config, Graph initial);

    /// i-link-only search: passes until one adopts nothing. Returns true iff
    /// any link set was adopted.
    bool lookahead(std::size_t i);

    const Graph& graph() const noexcept { return graph_; }
    const LearnTrace& trace() const noexcept { return trace_; }
    const SearchConfig& config() const noexcept { return config_; }

    LearnResult finish() &&;

private:
    bool run_pass(std::size_t i);
    void note_clique_size();

    SearchConfig config_;
    EntropyEvaluator eval_;
    Graph graph_;
    LearnTrace trace_;
    double entropy_ = 0.0;
    std::uint64_t pass_index_ = 0;
};

/// Spec-level lookahead on a caller-owned graph; the trace is discarded
/// unless `trace` is given, in which case passes are appended to it.
bool lookahead(Graph& g, std::size_t i, const SearchConfig& config, LearnTrace* trace = nullptr);

LearnResult ml_learn(const SearchConfig& config);
LearnResult straightforward_learn(const SearchConfig& config);
LearnResult single_link_learn(const SearchConfig& config);
/// Dispatches on config.mode.
LearnResult learn(const SearchConfig& config);

}  // namespace pilearn
