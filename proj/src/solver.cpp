#include "ccmc/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace ccmc {

namespace {

SelectionResult pick_from_all(const ParetoArchive& archive, SplitMix64& rng) {
    return {static_cast<std::size_t>(rng.next_below(archive.size())), false};
}

} // namespace

SelectionResult sliding_select(const ParetoArchive& archive, std::uint64_t t,
                               std::uint64_t t_max, double bound, SplitMix64& rng) {
    if (archive.empty())
        throw std::logic_error("selection from an empty archive");
    if (t <= t_max && t_max > 0) {
        const double c = (static_cast<double>(t) / static_cast<double>(t_max)) * bound;
        auto [lo, hi] = archive.weight_range(std::floor(c), std::ceil(c));
        if (lo < hi)
            return {lo + static_cast<std::size_t>(rng.next_below(hi - lo)), true};
    }
    return pick_from_all(archive, rng);
}

SelectionResult adaptive_select(const ParetoArchive& archive, std::uint64_t t,
                                std::uint64_t t_max, double bound,
                                WindowState& state, SplitMix64& rng) {
    if (archive.empty())
        throw std::logic_error("selection from an empty archive");
    if (state.w_size < 1)
        throw std::invalid_argument("window size must be at least 1");
    if (t <= t_max && t_max > 0) {
        const double c = (static_cast<double>(t) / static_cast<double>(t_max)) * bound;
        const double w_lo = std::floor(c);
        auto [lo, hi] = archive.weight_range(w_lo, w_lo + state.w_size);
        if (lo == hi) {
            state.w_size += 1;
        } else {
            if (state.w_size > 1 && hi - lo > 1)
                state.w_size -= 1;
            return {lo + static_cast<std::size_t>(rng.next_below(hi - lo)), true};
        }
    }
    return pick_from_all(archive, rng);
}

RunOutput run_optimizer(Algo algo, const Graph& graph, const ChanceEvaluator& evaluator,
                        double bound, std::uint64_t t_max, std::uint64_t seed,
                        const RunOptions& options) {
    if (options.w_size_init < 1)
        throw std::invalid_argument("initial window size must be at least 1");

    SplitMix64 mutation_rng(substream_seed(seed, 1));
    SplitMix64 selection_rng(substream_seed(seed, 2));
    WindowState window{options.w_size_init};
    const WeightModel& model = *evaluator.model;
    const bool sampling = evaluator.kind == EvaluatorKind::Sampling;
    const double variance_per_element = model.dispersion * model.dispersion / 3.0;

    RunOutput out;
    BitVector empty(static_cast<std::size_t>(graph.n), 0);
    ScoredSolution initial = score(empty, graph, evaluator, bound);
    out.archive.insert(initial);
    if (options.collect_trace)
        out.trace.records.push_back({0, initial.w, initial.f, false, window.w_size});

    ScoredSolution offspring;
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        SelectionResult sel;
        switch (algo) {
        case Algo::Gsemo:
            sel = pick_from_all(out.archive, selection_rng);
            break;
        case Algo::SlidingWindow:
            sel = sliding_select(out.archive, t, t_max, bound, selection_rng);
            break;
        case Algo::AdaptiveSlidingWindow:
            sel = adaptive_select(out.archive, t, t_max, bound, window, selection_rng);
            break;
        }

        const ScoredSolution& parent = out.archive.members()[sel.index];
        const std::vector<Flip> flips = mutate(parent.bits, mutation_rng);

        offspring = parent;
        apply_flips_to_bits(offspring.bits, flips);
        coverage_apply_flips(offspring.cover, graph, flips);
        for (const Flip& f : flips) {
            const double a = model.expected[static_cast<std::size_t>(f.index)];
            if (f.value) {
                offspring.cardinality += 1;
                offspring.expected_sum += a;
                offspring.variance_sum += variance_per_element;
            } else {
                offspring.cardinality -= 1;
                offspring.expected_sum -= a;
                offspring.variance_sum -= variance_per_element;
            }
        }
        if (sampling && !flips.empty())
            samplesum_apply_flips(offspring.sample_sums, *evaluator.samples, flips);

        offspring.w = cached_weight(evaluator, offspring);
        offspring.f = (offspring.w <= bound) ? offspring.cover.covered_total : -1;

        const double w = offspring.w;
        const long long f = offspring.f;
        if (out.archive.insert(std::move(offspring)) && options.collect_trace)
            out.trace.records.push_back({t, w, f, sel.from_window, window.w_size});
    }
    out.iterations = t_max;
    return out;
}

} // namespace ccmc
