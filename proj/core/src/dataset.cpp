#include <pilearn/dataset.hpp>

#include <stdexcept>

namespace pilearn {

Dataset::Dataset(Domain domain, std::vector<std::vector<State>> cases) : domain_(std::move(domain)) {
    values_.reserve(cases.size() * domain_.size());
    for (const auto& c : cases) {
        if (c.size() != domain_.size()) {
            throw std::invalid_argument("case has " + std::to_string(c.size()) + " values, expected " +
                                        std::to_string(domain_.size()));
        }
        values_.insert(values_.end(), c.begin(), c.end());
    }
    n_ = cases.size();
    validate();
}

Dataset::Dataset(Domain domain, std::vector<State> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (domain_.empty()) {
        if (!values_.empty()) throw std::invalid_argument("values given for an empty domain");
        return;
    }
    if (values_.size() % domain_.size() != 0) {
        throw std::invalid_argument("value count is not a multiple of the variable count");
    }
    n_ = values_.size() / domain_.size();
    validate();
}

std::span<const State> Dataset::row(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("case index out of range");
    const auto width = domain_.size();
    return std::span<const State>(values_).subspan(i * width, width);
}

void Dataset::validate() const {
    const auto width = domain_.size();
    for (std::size_t k = 0; k < values_.size(); ++k) {
        const auto& var = domain_[k % width];
        if (values_[k] >= var.cardinality) {
            throw std::invalid_argument("case " + std::to_string(k / width) + ": value " +
                                        std::to_string(values_[k]) + " out of range for '" + var.name + "'");
        }
    }
}

}  // namespace pilearn
