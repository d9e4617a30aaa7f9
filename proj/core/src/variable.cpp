#include <pilearn/variable.hpp>

#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace pilearn {

namespace {

constexpr std::size_t kMaxStates = std::size_t{1} << 40;

}  // namespace

Domain::Domain(std::vector<std::pair<std::string, std::size_t>> variables) {
    std::unordered_set<std::string> seen;
    variables_.reserve(variables.size());
    for (auto& [name, card] : variables) {
        if (name.empty()) {
            throw std::invalid_argument("variable name must not be empty");
        }
        if (card < 2) {
            throw std::invalid_argument("variable '" + name + "' needs cardinality >= 2");
        }
        if (!seen.insert(name).second) {
            throw std::invalid_argument("duplicate variable name '" + name + "'");
        }
        variables_.push_back(Variable{std::move(name), variables_.size(), card});
    }
}

std::optional<std::size_t> Domain::find(std::string_view name) const {
    for (const auto& v : variables_) {
        if (v.name == name) return v.index;
    }
    return std::nullopt;
}

std::size_t Domain::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::vector<std::size_t> Domain::indices_of(std::span<const std::string> names) const {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(index_of(n));
    return out;
}

std::vector<std::string> Domain::names() const {
    std::vector<std::string> out;
    out.reserve(variables_.size());
    for (const auto& v : variables_) out.push_back(v.name);
    return out;
}

std::vector<std::string> Domain::names_of(std::span<const std::size_t> indices) const {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(variables_.at(i).name);
    return out;
}

std::size_t Domain::state_count() const {
    std::size_t total = 1;
    for (const auto& v : variables_) {
        if (total > kMaxStates / v.cardinality) {
            throw std::overflow_error("joint state space too large");
        }
        total *= v.cardinality;
    }
    return total;
}

std::size_t Domain::state_count(std::span<const std::size_t> subset) const {
    std::size_t total = 1;
    for (auto i : subset) {
        const auto card = variables_.at(i).cardinality;
        if (total > kMaxStates / card) {
            throw std::overflow_error("marginal state space too large");
        }
        total *= card;
    }
    return total;
}

std::size_t Domain::encode(std::span<const State> values) const {
    if (values.size() != variables_.size()) {
        throw std::invalid_argument("assignment length does not match domain size");
    }
    std::size_t code = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= variables_[i].cardinality) {
            throw std::invalid_argument("value out of range for variable '" + variables_[i].name + "'");
        }
        code = code * variables_[i].cardinality + values[i];
    }
    return code;
}

std::vector<State> Domain::decode(std::size_t code) const {
    std::vector<State> values(variables_.size());
    for (std::size_t i = variables_.size(); i-- > 0;) {
        values[i] = static_cast<State>(code % variables_[i].cardinality);
        code /= variables_[i].cardinality;
    }
    if (code != 0) throw std::invalid_argument("assignment code out of range");
    return values;
}

void check_subset(const Domain& domain, std::span<const std::size_t> subset) {
    if (subset.empty()) throw std::invalid_argument("variable subset must not be empty");
    std::vector<bool> seen(domain.size(), false);
    for (auto i : subset) {
        if (i >= domain.size()) {
            throw std::invalid_argument("unknown variable index " + std::to_string(i));
        }
        if (seen[i]) {
            throw std::invalid_argument("variable '" + domain[i].name + "' repeated in subset");
        }
        seen[i] = true;
    }
}

}  // namespace pilearn
