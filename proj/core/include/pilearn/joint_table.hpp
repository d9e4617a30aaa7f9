#pragma once

#include <pilearn/variable.hpp>

#include <span>
#include <vector>

namespace pilearn {

inline constexpr double kMassTolerance = 1e-9;

/// Exact joint distribution over every full assignment of a domain.
/// Entries are indexed by Domain::encode; structural zeros are kept.
class JointTable {
public:
    JointTable() = default;
    /// Throws std::invalid_argument on size mismatch, negative entries, or a
    /// total mass further than kMassTolerance from 1.
    JointTable(Domain domain, std::vector<double> probabilities);

    const Domain& domain() const noexcept { return domain_; }
    std::span<const double> probabilities() const noexcept { return p_; }
    double probability(std::size_t code) const { return p_.at(code); }
    double probability(std::span<const State> values) const { return p_.at(domain_.encode(values)); }
    std::size_t size() const noexcept { return p_.size(); }

    bool operator==(const JointTable&) const = default;

private:
    Domain domain_;
    std::vector<double> p_;
};

/// Distribution over an ordered subset of a source domain's variables.
/// Cell order is mixed-radix over `subset`, first member most significant.
class DistributionTable {
public:
    DistributionTable() = default;
    DistributionTable(std::vector<std::size_t> subset, std::vector<std::size_t> cardinalities,
                      std::vector<double> probabilities);

    const std::vector<std::size_t>& subset() const noexcept { return subset_; }
    const std::vector<std::size_t>& cardinalities() const noexcept { return cards_; }
    std::span<const double> probabilities() const noexcept { return p_; }
    double operator[](std::size_t cell) const { return p_.at(cell); }
    double at(std::span<const State> values) const;
    std::size_t size() const noexcept { return p_.size(); }

    bool operator==(const DistributionTable&) const = default;

private:
    std::vector<std::size_t> subset_;
    std::vector<std::size_t> cards_;
    std::vector<double> p_;
};

}  // namespace pilearn
