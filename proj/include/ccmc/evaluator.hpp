#pragma once

#include "ccmc/samples.hpp"
#include "ccmc/weights.hpp"

namespace ccmc {

enum class EvaluatorKind { Chebyshev, Chernoff, Sampling };

// W_cheb(X) = E[W(X)] + sqrt((1 - alpha) * Var[W(X)] / alpha)
double chebyshev_from_moments(double expected, double variance, double alpha);
double chebyshev_weight(const WeightModel& model, const BitVector& selection,
                        double alpha);

// W_chen(X) = E[W(X)] + sqrt(3 * d * |X| * ln(1/alpha))
double chernoff_from_moments(double expected, double dispersion,
                             std::size_t cardinality, double alpha);
double chernoff_weight(const WeightModel& model, const BitVector& selection,
                       double alpha);

// Strategy object mapping a solution to its scalar constraint weight.
struct ChanceEvaluator {
    EvaluatorKind kind = EvaluatorKind::Chebyshev;
    double alpha = 0.1;
    const WeightModel* model = nullptr;
    const SampleMatrix* samples = nullptr; // Sampling only

    double evaluate(const BitVector& selection) const;
};

} // namespace ccmc
