#include <pilearn/joint_table.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pilearn {

namespace {

void check_mass(std::span<const double> p) {
    double total = 0.0;
    for (double x : p) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw std::invalid_argument("probabilities must be finite and non-negative");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
        throw std::invalid_argument("probability mass " + std::to_string(total) + " is not 1");
    }
}

}  // namespace

JointTable::JointTable(Domain domain, std::vector<double> probabilities)
    : domain_(std::move(domain)), p_(std::move(probabilities)) {
    if (domain_.empty()) throw std::invalid_argument("joint table needs at least one variable");
    if (p_.size() != domain_.state_count()) {
        throw std::invalid_argument("joint table has " + std::to_string(p_.size()) + " entries, expected " +
                                    std::to_string(domain_.state_count()));
    }
    check_mass(p_);
}

DistributionTable::DistributionTable(std::vector<std::size_t> subset, std::vector<std::size_t> cardinalities,
                                     std::vector<double> probabilities)
    : subset_(std::move(subset)), cards_(std::move(cardinalities)), p_(std::move(probabilities)) {
    if (subset_.size() != cards_.size()) {
        throw std::invalid_argument("subset and cardinality lists differ in length");
    }
    const auto cells = std::accumulate(cards_.begin(), cards_.end(), std::size_t{1}, std::multiplies<>{});
    if (cells != p_.size()) throw std::invalid_argument("distribution table has the wrong cell count");
    check_mass(p_);
}

double DistributionTable::at(std::span<const State> values) const {
    if (values.size() != cards_.size()) throw std::invalid_argument("assignment length mismatch");
    std::size_t code = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= cards_[i]) throw std::invalid_argument("value out of range");
        code = code * cards_[i] + values[i];
    }
    return p_[code];
}

}  // namespace pilearn
