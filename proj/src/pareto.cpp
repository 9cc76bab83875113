#include "ccmc/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccmc {

bool weakly_dominates(const ScoredSolution& x, const ScoredSolution& y) {
    return x.f >= y.f && x.w <= y.w;
}

bool strictly_dominates(const ScoredSolution& x, const ScoredSolution& y) {
    return weakly_dominates(x, y) && (x.f > y.f || x.w < y.w);
}

ScoredSolution score(const BitVector& bits, const Graph& graph,
                     const ChanceEvaluator& evaluator, double bound) {
    if (!(bound > 0.0))
        throw std::invalid_argument("bound must be positive");
    ScoredSolution s;
    s.bits = bits;
    s.cardinality = 0;
    for (std::uint8_t b : bits)
        s.cardinality += b;
    s.cover = make_coverage_state(graph, bits);
    s.expected_sum = expected_weight(*evaluator.model, bits);
    s.variance_sum = variance(*evaluator.model, bits);
    if (evaluator.kind == EvaluatorKind::Sampling)
        s.sample_sums = make_sample_sums(bits, *evaluator.samples);
    s.w = evaluator.evaluate(bits);
    s.f = (s.w <= bound) ? s.cover.covered_total : -1;
    return s;
}

double cached_weight(const ChanceEvaluator& evaluator, const ScoredSolution& solution) {
    switch (evaluator.kind) {
    case EvaluatorKind::Chebyshev:
        return chebyshev_from_moments(solution.expected_sum, solution.variance_sum,
                                      evaluator.alpha);
    case EvaluatorKind::Chernoff:
        return chernoff_from_moments(solution.expected_sum, evaluator.model->dispersion,
                                     static_cast<std::size_t>(solution.cardinality),
                                     evaluator.alpha);
    case EvaluatorKind::Sampling:
        return quantile_from_sums(solution.sample_sums, evaluator.alpha);
    }
    throw std::logic_error("unknown evaluator kind");
}

bool ParetoArchive::insert(ScoredSolution y) {
    // Smallest f >= y.f; by the ascending-w invariant this member also has
    // the smallest weight among all members with f >= y.f.
    auto it = std::lower_bound(members_.begin(), members_.end(), y.f,
                               [](const ScoredSolution& m, long long f) { return m.f < f; });
    if (it != members_.end() && it->w <= y.w) {
        if (it->f == y.f && it->w == y.w) {
            *it = std::move(y); // equal objectives: the newcomer replaces
            return true;
        }
        return false; // strictly dominated
    }
    // Members with f <= y.f and w >= y.w are weakly dominated; they form a
    // suffix of the prefix ending at it (inclusive when it shares y's f and
    // is heavier) because w ascends with f.
    auto end_removed = (it != members_.end() && it->f == y.f) ? it + 1 : it;
    auto first_removed = std::lower_bound(
        members_.begin(), end_removed, y.w,
        [](const ScoredSolution& m, double w) { return m.w < w; });
    if (first_removed != end_removed) {
        *first_removed = std::move(y);
        members_.erase(first_removed + 1, end_removed);
    } else {
        members_.insert(end_removed, std::move(y));
    }
    return true;
}

const ScoredSolution& ParetoArchive::best_feasible() const {
    if (members_.empty())
        throw std::logic_error("archive is empty");
    return members_.back();
}

std::pair<std::size_t, std::size_t> ParetoArchive::weight_range(double lo, double hi) const {
    auto first = std::lower_bound(members_.begin(), members_.end(), lo,
                                  [](const ScoredSolution& m, double w) { return m.w < w; });
    auto last = std::upper_bound(first, members_.end(), hi,
                                 [](double w, const ScoredSolution& m) { return w < m.w; });
    return {static_cast<std::size_t>(first - members_.begin()),
            static_cast<std::size_t>(last - members_.begin())};
}

std::vector<Flip> mutate(const BitVector& parent, SplitMix64& rng) {
    const std::size_t n = parent.size();
    std::vector<Flip> flips;
    if (n == 0)
        return flips;
    if (n == 1) {
        flips.push_back({0, parent[0] == 0});
        return flips;
    }
    // Geometric skipping: inversion of the gap distribution between flipped
    // positions gives exact Bernoulli(1/n) per bit without n RNG draws.
    const double log_keep = std::log1p(-1.0 / static_cast<double>(n));
    std::int64_t pos = -1;
    for (;;) {
        const double u = 1.0 - rng.next_unit(); // (0, 1]
        pos += 1 + static_cast<std::int64_t>(std::log(u) / log_keep);
        if (pos >= static_cast<std::int64_t>(n))
            break;
        const auto i = static_cast<std::size_t>(pos);
        flips.push_back({static_cast<int>(i), parent[i] == 0});
    }
    return flips;
}

void apply_flips_to_bits(BitVector& bits, const std::vector<Flip>& flips) {
    for (const Flip& f : flips)
        bits[static_cast<std::size_t>(f.index)] = f.value ? 1 : 0;
}

} // namespace ccmc
