#include <pilearn/search.hpp>

#include <pilearn/chordal.hpp>
#include <pilearn/error.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace pilearn {

std::string_view to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::ml: return "ml";
        case SearchMode::straightforward: return "straightforward";
        case SearchMode::single: return "single";
    }
    return "unknown";
}

SearchMode parse_search_mode(std::string_view text) {
    if (text == "ml") return SearchMode::ml;
    if (text == "straightforward") return SearchMode::straightforward;
    if (text == "single") return SearchMode::single;
    throw std::invalid_argument("unknown search mode '" + std::string(text) + "'");
}

void validate(const SearchConfig& config) {
    if (config.max_links < 1) throw std::invalid_argument("max_links must be at least 1");
    if (!std::isfinite(config.delta_h) || config.delta_h < 0.0) {
        throw std::invalid_argument("delta_h must be a finite non-negative number");
    }
}

std::vector<LinkSet> LearnTrace::adoptions() const {
    std::vector<LinkSet> out;
    for (const auto& p : passes)
        if (p.adopted) out.push_back(*p.adopted);
    return out;
}

std::size_t LearnTrace::pass_count(std::size_t level) const {
    return static_cast<std::size_t>(
        std::count_if(passes.begin(), passes.end(), [&](const PassRecord& p) { return p.level == level; }));
}

Learner::Learner(SearchConfig config) : Learner(config, Graph(config.source.domain().size())) {}

Learner::Learner(SearchConfig config, Graph initial)
    : config_(std::move(config)), eval_(config_.source), graph_(std::move(initial)) {
    validate(config_);
    if (graph_.node_count() != config_.source.domain().size()) {
        throw std::invalid_argument("initial graph does not match the source's variables");
    }
    if (!is_chordal(graph_)) throw std::invalid_argument("initial graph must be chordal");
    entropy_ = eval_.dmn_entropy(graph_);
    trace_.initial_entropy = trace_.final_entropy = entropy_;
    note_clique_size();
}

void Learner::note_clique_size() {
    for (const auto& c : maximal_cliques(graph_)) {
        trace_.max_clique_size = std::max(trace_.max_clique_size, c.size());
    }
}

bool Learner::run_pass(std::size_t i) {
    PassRecord rec;
    rec.level = i;

    double best = 0.0;  // dh'
    LinkSet best_set;

    auto consider = [&](std::span<const Link> links) {
        ++rec.candidates_enumerated;
        // A maximal clique of g* covers every endpoint iff the endpoints are
        // pairwise adjacent in g*; test that before the chordality check.
        Graph g_star = graph_;
        g_star.add_links(links);
        if (!endpoints_form_clique(g_star, links) || !is_chordal(g_star)) return;
        ++rec.candidates_evaluated;
        const double dh = eval_.local_entropy_decrement(graph_, links);
        if (dh > best) {
            best = dh;
            best_set.assign(links.begin(), links.end());
        }
    };

    if (config_.shuffle_seed) {
        auto candidates = enumerate_candidates(graph_, i);
        std::mt19937_64 rng(*config_.shuffle_seed + 0x9e3779b97f4a7c15ULL * ++pass_index_);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        for (const auto& c : candidates) consider(c);
    } else {
        for_each_candidate(graph_, i, consider);
    }

    rec.best_decrement = best;
    const bool adopt = best > config_.delta_h;
    if (adopt) {
        graph_.add_links(best_set);
        if (!is_chordal(graph_)) throw InvariantError("working graph lost chordality after an adoption");
        const double after = eval_.dmn_entropy(graph_);
        if (!(after < entropy_)) throw InvariantError("DMN entropy did not decrease after an adoption");
        entropy_ = after;
        rec.adopted = std::move(best_set);
        rec.decrement = best;
        note_clique_size();
    }
    rec.entropy_after = entropy_;
    trace_.total_enumerated += rec.candidates_enumerated;
    trace_.total_evaluated += rec.candidates_evaluated;
    rec.cumulative_evaluated = trace_.total_evaluated;
    trace_.final_entropy = entropy_;
    trace_.passes.push_back(std::move(rec));
    return adopt;
}

bool Learner::lookahead(std::size_t i) {
    if (i < 1) throw std::invalid_argument("lookahead size must be at least 1");
    bool modified = false;
    while (run_pass(i)) modified = true;
    return modified;
}

LearnResult Learner::finish() && { return LearnResult{std::move(graph_), std::move(trace_)}; }

bool lookahead(Graph& g, std::size_t i, const SearchConfig& config, LearnTrace* trace) {
    Learner learner(config, g);
    const bool modified = learner.lookahead(i);
    auto result = std::move(learner).finish();
    g = std::move(result.graph);
    if (trace) {
        trace->passes.insert(trace->passes.end(), result.trace.passes.begin(), result.trace.passes.end());
        trace->total_enumerated += result.trace.total_enumerated;
        trace->total_evaluated += result.trace.total_evaluated;
        trace->max_clique_size = std::max(trace->max_clique_size, result.trace.max_clique_size);
        trace->final_entropy = result.trace.final_entropy;
    }
    return modified;
}

LearnResult ml_learn(const SearchConfig& config) {
    Learner learner(config);
    const auto k = config.max_links;
    for (std::size_t j = 1; j <= k; ++j) {
        std::size_t i = j;
        while (i <= j) {
            const bool modified = learner.lookahead(i);
            if (i > 1 && modified) {
                i = 1;  // backtrack
            } else {
                ++i;
            }
        }
    }
    return std::move(learner).finish();
}

LearnResult straightforward_learn(const SearchConfig& config) {
    Learner learner(config);
    for (std::size_t i = 1; i <= config.max_links; ++i) learner.lookahead(i);
    return std::move(learner).finish();
}

LearnResult single_link_learn(const SearchConfig& config) {
    Learner learner(config);
    learner.lookahead(1);
    return std::move(learner).finish();
}

LearnResult learn(const SearchConfig& config) {
    switch (config.mode) {
        case SearchMode::ml: return ml_learn(config);
        case SearchMode::straightforward: return straightforward_learn(config);
        case SearchMode::single: return single_link_learn(config);
    }
    throw std::invalid_argument("unknown search mode");
}

}  // namespace pilearn
