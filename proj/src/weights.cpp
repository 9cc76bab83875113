#include "ccmc/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace ccmc {

WeightModel make_iid_model(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("weight model needs at least one element");
    WeightModel model;
    model.kind = WeightKind::Iid;
    model.dispersion = static_cast<double>(n);
    model.expected.assign(n, static_cast<double>(n));
    return model;
}

WeightModel make_degree_model(const Graph& graph) {
    if (graph.n == 0)
        throw std::invalid_argument("weight model needs at least one element");
    const double n = static_cast<double>(graph.n);
    WeightModel model;
    model.kind = WeightKind::DegreeBased;
    model.dispersion = n;
    model.expected.resize(static_cast<std::size_t>(graph.n));
    for (int i = 0; i < graph.n; ++i) {
        const double base = n + static_cast<double>(graph.degrees[static_cast<std::size_t>(i)]);
        model.expected[static_cast<std::size_t>(i)] = std::pow(base, 5) / std::pow(n, 4);
    }
    return model;
}

double expected_weight(const WeightModel& model, const BitVector& selection) {
    if (selection.size() != model.size())
        throw std::invalid_argument("selection length does not match weight model");
    double sum = 0.0;
    for (std::size_t i = 0; i < selection.size(); ++i)
        if (selection[i])
            sum += model.expected[i];
    return sum;
}

double variance(const WeightModel& model, const BitVector& selection) {
    if (selection.size() != model.size())
        throw std::invalid_argument("selection length does not match weight model");
    const double per_element = model.dispersion * model.dispersion / 3.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < selection.size(); ++i)
        if (selection[i])
            sum += per_element;
    return sum;
}

} // namespace ccmc
