#include "ccmc/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccmc {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
}

std::size_t count_selected(const BitVector& selection) {
    std::size_t count = 0;
    for (std::uint8_t b : selection)
        count += b;
    return count;
}

} // namespace

double chebyshev_from_moments(double expected, double variance, double alpha) {
    check_alpha(alpha);
    // Incremental maintenance can leave a variance of -0.0-ish after an
    // add/remove round trip; keep sqrt off negative inputs.
    return expected + std::sqrt((1.0 - alpha) * std::max(variance, 0.0) / alpha);
}

double chebyshev_weight(const WeightModel& model, const BitVector& selection,
                        double alpha) {
    return chebyshev_from_moments(expected_weight(model, selection),
                                  variance(model, selection), alpha);
}

double chernoff_from_moments(double expected, double dispersion,
                             std::size_t cardinality, double alpha) {
    check_alpha(alpha);
    return expected + std::sqrt(3.0 * dispersion * static_cast<double>(cardinality) *
                                std::log(1.0 / alpha));
}

double chernoff_weight(const WeightModel& model, const BitVector& selection,
                       double alpha) {
    return chernoff_from_moments(expected_weight(model, selection), model.dispersion,
                                 count_selected(selection), alpha);
}

double ChanceEvaluator::evaluate(const BitVector& selection) const {
    switch (kind) {
    case EvaluatorKind::Chebyshev:
        return chebyshev_weight(*model, selection, alpha);
    case EvaluatorKind::Chernoff:
        return chernoff_weight(*model, selection, alpha);
    case EvaluatorKind::Sampling:
        if (samples == nullptr)
            throw std::logic_error("sampling evaluator configured without a sample matrix");
        return sampling_weight(selection, *samples, alpha);
    }
    throw std::logic_error("unknown evaluator kind");
}

} // namespace ccmc
