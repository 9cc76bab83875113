#pragma once

#include "ccmc/graph.hpp"

#include <vector>

namespace ccmc {

enum class WeightKind { Iid, DegreeBased };

// Per-element uniform weight distributions: element i is Uniform[a_i - d, a_i + d]
// with a shared dispersion d, 0 < d <= a_i.
struct WeightModel {
    WeightKind kind = WeightKind::Iid;
    double dispersion = 0.0;
    std::vector<double> expected;

    std::size_t size() const { return expected.size(); }
};

// a_i = d = n for every element.
WeightModel make_iid_model(std::size_t n);

// a_i = (n + D(v_i))^5 / n^4, d = n. Computed in double; (n + D)^5 overflows
// 64-bit integers already at n around 18k.
WeightModel make_degree_model(const Graph& graph);

// E[W(X)] = sum of a_i over selected elements.
double expected_weight(const WeightModel& model, const BitVector& selection);

// Var[W(X)] = sum of d^2/3 over selected elements.
double variance(const WeightModel& model, const BitVector& selection);

} // namespace ccmc
