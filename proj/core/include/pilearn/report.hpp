#pragma once

#include <pilearn/pi_oracle.hpp>
#include <pilearn/search.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pilearn {

struct RunConfigEcho {
    std::string mode;
    std::size_t max_links = 1;
    double threshold = 0.0;
    std::string source_kind;  // "model", "sample" or "data"
    std::string source;       // model name/path or CSV path
    std::size_t cases = 0;    // 0 for exact sources
    std::optional<std::uint64_t> seed;

    bool operator==(const RunConfigEcho&) const = default;
};

/// Everything a learning run produces, in serializable form.
struct RunReport {
    RunConfigEcho config;
    std::vector<std::string> variables;
    LinkSet links;
    LearnTrace trace;
    std::optional<std::vector<ColoredLink>> coloring;
    std::optional<bool> is_imap;

    bool operator==(const RunReport&) const = default;
};

/// Links are written as [name, name] pairs. Output is byte-deterministic.
std::string report_to_json(const RunReport& report);
/// Throws InputError on malformed input.
RunReport report_from_json(std::string_view text);

}  // namespace pilearn
