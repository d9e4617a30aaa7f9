#pragma once

#include <pilearn/variable.hpp>

#include <span>
#include <vector>

namespace pilearn {

/// Complete discrete cases over a domain, stored row-major.
class Dataset {
public:
    Dataset() = default;
    Dataset(Domain domain, std::vector<std::vector<State>> cases);
    /// `values` holds n * domain.size() entries, case by case.
    Dataset(Domain domain, std::vector<State> values);

    const Domain& domain() const noexcept { return domain_; }
    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    std::span<const State> row(std::size_t i) const;
    State value(std::size_t i, std::size_t variable) const { return row(i)[variable]; }
    std::span<const State> values() const noexcept { return values_; }

    bool operator==(const Dataset&) const = default;

private:
    void validate() const;

    Domain domain_;
    std::vector<State> values_;
    std::size_t n_ = 0;
};

}  // namespace pilearn
