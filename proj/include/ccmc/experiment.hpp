#pragma once

#include "ccmc/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ccmc {

// Declarative description of one experiment cell (one graph, one algorithm,
// one evaluator configuration, `runs` independent seeds).
struct ExperimentConfig {
    std::string graph_path;
    Algo algo = Algo::AdaptiveSlidingWindow;
    WeightKind weights = WeightKind::Iid;
    EvaluatorKind evaluator = EvaluatorKind::Sampling;
    double alpha = 0.1;
    std::string bound = "half-n2"; // "half-n2" | "n2" | explicit real
    std::size_t t_sp = 250;
    std::uint64_t t_max = 1500000;
    int runs = 30;
    std::uint64_t seed = 1;
    std::string out_dir;
    bool trace = false;
    int workers = 1;
    int w_size_init = 1;
    bool timing = true; // when false, all wall-time fields are written as 0
};

double resolve_bound(const std::string& text, int n);

std::string algo_name(Algo algo);
std::string evaluator_name(EvaluatorKind kind);
std::string weights_name(WeightKind kind);
Algo parse_algo(const std::string& name);
EvaluatorKind parse_evaluator(const std::string& name);
WeightKind parse_weights(const std::string& name);

struct RunResult {
    int run_index = 0;
    std::uint64_t seed = 0;
    long long best_f = 0;
    int best_cardinality = 0;
    std::size_t archive_size = 0;
    double seconds = 0.0;
    std::string trace_path;
};

struct ExperimentSummary {
    long long min_f = 0;
    long long max_f = 0;
    double mean_f = 0.0;
    double std_f = 0.0; // sample standard deviation (n - 1)
    double mean_cardinality = 0.0;
    double mean_archive_size = 0.0;
    double seconds = 0.0;
    std::vector<RunResult> runs;
};

ExperimentSummary summarize(std::vector<RunResult> runs);

// Executes config.runs independent runs (seed_i = substream_seed(master, i))
// over a worker pool and aggregates. Shared inputs (graph, model, samples)
// are built once. Traces, when enabled, land in out_dir.
ExperimentSummary run_experiment(const ExperimentConfig& config, const Graph& graph);

std::string results_csv_header();
std::string results_csv_row(const ExperimentConfig& config, const Graph& graph,
                            const ExperimentSummary& summary);
std::string runs_csv_header();
std::string runs_csv_row(const RunResult& run);

// CSV with one row per accepted archive insertion.
void emit_trace(const RunTrace& trace, const std::string& path);

// Exhaustive Pareto front over all 2^n subsets; n <= 20.
std::vector<ScoredSolution> brute_force_front(const Graph& graph,
                                              const ChanceEvaluator& evaluator,
                                              double bound);

// Pairwise-scan non-dominance filter, one representative per (f, w) point.
// Deliberately independent of ParetoArchive so the two can cross-check.
std::vector<ScoredSolution> non_dominated_filter(std::vector<ScoredSolution> solutions);

} // namespace ccmc
