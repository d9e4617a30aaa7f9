#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pilearn {

struct Variable {
    std::string name;
    std::size_t index = 0;
    std::size_t cardinality = 2;

    bool operator==(const Variable&) const = default;
};

using State = std::uint32_t;

/// An ordered set of discrete variables.
///
/// Column order is significant: full assignments are encoded as mixed-radix
/// integers with the first variable as the most significant digit, so code 0
/// is the all-zero assignment and codes enumerate in lexicographic order.
class Domain {
public:
    Domain() = default;
    explicit Domain(std::vector<std::pair<std::string, std::size_t>> variables);

    std::size_t size() const noexcept { return variables_.size(); }
    bool empty() const noexcept { return variables_.empty(); }
    const Variable& operator[](std::size_t i) const { return variables_.at(i); }
    const std::vector<Variable>& variables() const noexcept { return variables_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws std::invalid_argument for an unknown name.
    std::size_t index_of(std::string_view name) const;
    std::vector<std::size_t> indices_of(std::span<const std::string> names) const;
    std::vector<std::string> names() const;
    std::vector<std::string> names_of(std::span<const std::size_t> indices) const;

    /// Product of cardinalities; throws std::overflow_error past 2^40 cells.
    std::size_t state_count() const;
    std::size_t state_count(std::span<const std::size_t> subset) const;

    std::size_t encode(std::span<const State> values) const;
    std::vector<State> decode(std::size_t code) const;

    bool operator==(const Domain&) const = default;

private:
    std::vector<Variable> variables_;
};

/// Throws std::invalid_argument if the subset is empty, repeats a variable,
/// or names an index outside the domain.
void check_subset(const Domain& domain, std::span<const std::size_t> subset);

}  // namespace pilearn
