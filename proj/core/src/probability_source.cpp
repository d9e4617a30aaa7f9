#include <pilearn/probability_source.hpp>

#include <stdexcept>

namespace pilearn {

ProbabilitySource::ProbabilitySource(Dataset data) : impl_(std::make_shared<const Dataset>(std::move(data))) {}

ProbabilitySource::ProbabilitySource(JointTable joint)
    : impl_(std::make_shared<const JointTable>(std::move(joint))) {}

const Domain& ProbabilitySource::domain() const noexcept {
    return std::visit([](const auto& p) -> const Domain& { return p->domain(); }, impl_);
}

bool ProbabilitySource::is_exact() const noexcept {
    return std::holds_alternative<std::shared_ptr<const JointTable>>(impl_);
}

const Dataset* ProbabilitySource::dataset() const noexcept {
    auto* p = std::get_if<std::shared_ptr<const Dataset>>(&impl_);
    return p ? p->get() : nullptr;
}

const JointTable* ProbabilitySource::joint() const noexcept {
    auto* p = std::get_if<std::shared_ptr<const JointTable>>(&impl_);
    return p ? p->get() : nullptr;
}

DistributionTable marginal(const ProbabilitySource& source, std::span<const std::size_t> subset) {
    const auto& domain = source.domain();
    check_subset(domain, subset);

    std::vector<std::size_t> cards;
    cards.reserve(subset.size());
    for (auto i : subset) cards.push_back(domain[i].cardinality);

    // stride[j]: weight of subset[j] in the marginal's mixed-radix code
    std::vector<std::size_t> stride(subset.size());
    std::size_t cells = 1;
    for (std::size_t j = subset.size(); j-- > 0;) {
        stride[j] = cells;
        cells *= cards[j];
    }
    std::vector<double> out(cells, 0.0);

    if (const auto* data = source.dataset()) {
        if (data->empty()) throw std::invalid_argument("cannot estimate a marginal from an empty dataset");
        std::vector<std::size_t> counts(cells, 0);
        for (std::size_t c = 0; c < data->size(); ++c) {
            const auto row = data->row(c);
            std::size_t code = 0;
            for (std::size_t j = 0; j < subset.size(); ++j) code += row[subset[j]] * stride[j];
            ++counts[code];
        }
        const auto n = static_cast<double>(data->size());
        for (std::size_t k = 0; k < cells; ++k) out[k] = static_cast<double>(counts[k]) / n;
    } else {
        const auto& joint = *source.joint();
        const auto width = domain.size();
        // Odometer over full assignments in code order, tracking the subset code.
        std::vector<std::size_t> weight(width, 0);
        for (std::size_t j = 0; j < subset.size(); ++j) weight[subset[j]] = stride[j];
        std::vector<State> digits(width, 0);
        std::size_t code = 0;
        const auto p = joint.probabilities();
        for (std::size_t full = 0; full < p.size(); ++full) {
            out[code] += p[full];
            for (std::size_t v = width; v-- > 0;) {
                if (++digits[v] < domain[v].cardinality) {
                    code += weight[v];
                    break;
                }
                code -= weight[v] * (digits[v] - 1);
                digits[v] = 0;
            }
        }
    }
    return DistributionTable(std::vector<std::size_t>(subset.begin(), subset.end()), std::move(cards),
                             std::move(out));
}

DistributionTable marginal(const ProbabilitySource& source, std::span<const std::string> names) {
    const auto idx = source.domain().indices_of(names);
    return marginal(source, std::span<const std::size_t>(idx));
}

DistributionTable full_distribution(const ProbabilitySource& source) {
    std::vector<std::size_t> all(source.domain().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return marginal(source, std::span<const std::size_t>(all));
}

}  // namespace pilearn
