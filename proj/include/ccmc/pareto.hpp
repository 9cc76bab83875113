#pragma once

#include "ccmc/evaluator.hpp"
#include "ccmc/graph.hpp"
#include "ccmc/rng.hpp"

#include <cstddef>
#include <vector>

namespace ccmc {

// A scored search point. f = -1 marks solutions whose constraint weight
// exceeds the bound; otherwise f is the coverage value. The caches carry
// everything the run loop needs to rescore an offspring incrementally.
struct ScoredSolution {
    BitVector bits;
    long long f = 0;
    double w = 0.0;
    int cardinality = 0;
    CoverageState cover;
    double expected_sum = 0.0;
    double variance_sum = 0.0;
    SampleSumVector sample_sums; // empty unless the sampling evaluator is active
};

// x >= y in the Pareto sense: no worse on coverage, no heavier.
bool weakly_dominates(const ScoredSolution& x, const ScoredSolution& y);
bool strictly_dominates(const ScoredSolution& x, const ScoredSolution& y);

// Full (non-incremental) scoring; also builds the caches.
ScoredSolution score(const BitVector& bits, const Graph& graph,
                     const ChanceEvaluator& evaluator, double bound);

// Constraint weight recomputed from the solution's caches alone.
double cached_weight(const ChanceEvaluator& evaluator, const ScoredSolution& solution);

// Mutually non-dominated set, kept sorted by f ascending. Because members are
// pairwise non-dominated, w is strictly ascending in f across the archive,
// which makes both dominance checks and weight-window queries binary searches.
class ParetoArchive {
public:
    // Returns true iff y entered the archive. A member with identical (f, w)
    // is replaced; anything weakly dominated by y is removed.
    bool insert(ScoredSolution y);

    const std::vector<ScoredSolution>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    // Member with maximal f.
    const ScoredSolution& best_feasible() const;

    // Half-open index range of members whose weight lies in [lo, hi].
    std::pair<std::size_t, std::size_t> weight_range(double lo, double hi) const;

private:
    std::vector<ScoredSolution> members_;
};

// Standard bit mutation: each bit flips independently with probability 1/n.
// Returns the flip list (positions with their new values).
std::vector<Flip> mutate(const BitVector& parent, SplitMix64& rng);

void apply_flips_to_bits(BitVector& bits, const std::vector<Flip>& flips);

} // namespace ccmc
