#pragma once

#include <pilearn/dataset.hpp>
#include <pilearn/joint_table.hpp>

#include <memory>
#include <span>
#include <string>
#include <variant>

namespace pilearn {

/// Either sampled cases (maximum-likelihood frequencies) or an exact joint.
/// Copies share the immutable underlying data.
class ProbabilitySource {
public:
    explicit ProbabilitySource(Dataset data);
    explicit ProbabilitySource(JointTable joint);

    const Domain& domain() const noexcept;
    bool is_exact() const noexcept;
    /// nullptr unless the source holds that alternative.
    const Dataset* dataset() const noexcept;
    const JointTable* joint() const noexcept;

private:
    std::variant<std::shared_ptr<const Dataset>, std::shared_ptr<const JointTable>> impl_;
};

/// Marginal over `subset` (indices into the source domain, in output order).
/// Dataset sources yield count / n with no smoothing.
/// Throws std::invalid_argument on an empty or invalid subset, or an empty dataset.
DistributionTable marginal(const ProbabilitySource& source, std::span<const std::size_t> subset);
DistributionTable marginal(const ProbabilitySource& source, std::span<const std::string> names);

/// Distribution over every variable in domain order.
DistributionTable full_distribution(const ProbabilitySource& source);

}  // namespace pilearn
