#pragma once

#include "ccmc/pareto.hpp"

#include <cstdint>
#include <vector>

namespace ccmc {

enum class Algo { Gsemo, SlidingWindow, AdaptiveSlidingWindow };

// Width of the adaptive selection window; never drops below 1.
struct WindowState {
    int w_size = 1;
};

struct TraceRecord {
    std::uint64_t t = 0;
    double w = 0.0;
    long long f = 0;
    bool from_window = false;
    int w_size = 0;
};

// One record per accepted archive insertion.
struct RunTrace {
    std::vector<TraceRecord> records;
};

struct SelectionResult {
    std::size_t index = 0;
    bool from_window = false;
};

// Parent selection restricted to members with weight in
// [floor(c), ceil(c)], c = (t / t_max) * B; falls back to the whole archive
// when the window is empty or t > t_max.
SelectionResult sliding_select(const ParetoArchive& archive, std::uint64_t t,
                               std::uint64_t t_max, double bound, SplitMix64& rng);

// Same lower bound with an adaptive upper bound floor(c) + w_size: the width
// grows by one when the window is empty and shrinks by one (down to 1) when
// it holds more than one member.
SelectionResult adaptive_select(const ParetoArchive& archive, std::uint64_t t,
                                std::uint64_t t_max, double bound,
                                WindowState& state, SplitMix64& rng);

struct RunOptions {
    bool collect_trace = false;
    int w_size_init = 1;
};

struct RunOutput {
    ParetoArchive archive;
    RunTrace trace;
    std::uint64_t iterations = 0;
};

// One seeded optimization run. The archive starts from the all-zero solution;
// each iteration selects a parent (uniformly, or through the sliding /
// adaptive window), mutates it, rescores the offspring incrementally, and
// offers it to the archive. Mutation and selection draw from independent
// substreams of `seed`.
RunOutput run_optimizer(Algo algo, const Graph& graph, const ChanceEvaluator& evaluator,
                        double bound, std::uint64_t t_max, std::uint64_t seed,
                        const RunOptions& options = {});

} // namespace ccmc
