#include "ccmc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace ccmc {

double resolve_bound(const std::string& text, int n) {
    const double nd = static_cast<double>(n);
    double bound = 0.0;
    if (text == "half-n2") {
        bound = std::floor(nd * nd / 2.0);
    } else if (text == "n2") {
        bound = nd * nd;
    } else {
        std::size_t consumed = 0;
        bound = std::stod(text, &consumed);
        if (consumed != text.size())
            throw std::invalid_argument("bad bound format: " + text);
    }
    if (!(bound > 0.0))
        throw std::invalid_argument("bound must resolve to a positive value");
    return bound;
}

std::string algo_name(Algo algo) {
    switch (algo) {
    case Algo::Gsemo: return "gsemo";
    case Algo::SlidingWindow: return "sw";
    case Algo::AdaptiveSlidingWindow: return "asw";
    }
    return "?";
}

std::string evaluator_name(EvaluatorKind kind) {
    switch (kind) {
    case EvaluatorKind::Chebyshev: return "cheb";
    case EvaluatorKind::Chernoff: return "chen";
    case EvaluatorKind::Sampling: return "sample";
    }
    return "?";
}

std::string weights_name(WeightKind kind) {
    return kind == WeightKind::Iid ? "iid" : "degree";
}

Algo parse_algo(const std::string& name) {
    if (name == "gsemo") return Algo::Gsemo;
    if (name == "sw") return Algo::SlidingWindow;
    if (name == "asw") return Algo::AdaptiveSlidingWindow;
    throw std::invalid_argument("unknown algorithm: " + name);
}

EvaluatorKind parse_evaluator(const std::string& name) {
    if (name == "cheb") return EvaluatorKind::Chebyshev;
    if (name == "chen") return EvaluatorKind::Chernoff;
    if (name == "sample") return EvaluatorKind::Sampling;
    throw std::invalid_argument("unknown evaluator: " + name);
}

WeightKind parse_weights(const std::string& name) {
    if (name == "iid") return WeightKind::Iid;
    if (name == "degree") return WeightKind::DegreeBased;
    throw std::invalid_argument("unknown weight kind: " + name);
}

ExperimentSummary summarize(std::vector<RunResult> runs) {
    if (runs.empty())
        throw std::invalid_argument("no runs to summarize");
    ExperimentSummary s;
    s.min_f = runs.front().best_f;
    s.max_f = runs.front().best_f;
    double sum = 0.0, sum_card = 0.0, sum_pop = 0.0;
    for (const RunResult& r : runs) {
        s.min_f = std::min(s.min_f, r.best_f);
        s.max_f = std::max(s.max_f, r.best_f);
        sum += static_cast<double>(r.best_f);
        sum_card += static_cast<double>(r.best_cardinality);
        sum_pop += static_cast<double>(r.archive_size);
    }
    const double count = static_cast<double>(runs.size());
    s.mean_f = sum / count;
    s.mean_cardinality = sum_card / count;
    s.mean_archive_size = sum_pop / count;
    if (runs.size() > 1) {
        double ss = 0.0;
        for (const RunResult& r : runs) {
            const double d = static_cast<double>(r.best_f) - s.mean_f;
            ss += d * d;
        }
        s.std_f = std::sqrt(ss / (count - 1.0));
    }
    s.runs = std::move(runs);
    return s;
}

ExperimentSummary run_experiment(const ExperimentConfig& config, const Graph& graph) {
    if (config.runs < 1)
        throw std::invalid_argument("run count must be at least 1");
    if (config.trace && config.out_dir.empty())
        throw std::invalid_argument("tracing requires an output directory");

    const double bound = resolve_bound(config.bound, graph.n);
    const WeightModel model = (config.weights == WeightKind::Iid)
                                  ? make_iid_model(static_cast<std::size_t>(graph.n))
                                  : make_degree_model(graph);
    SampleMatrix samples;
    if (config.evaluator == EvaluatorKind::Sampling)
        samples = generate_samples(model, config.t_sp, config.seed);

    ChanceEvaluator evaluator{config.evaluator, config.alpha, &model,
                              config.evaluator == EvaluatorKind::Sampling ? &samples
                                                                          : nullptr};

    if (!config.out_dir.empty())
        std::filesystem::create_directories(config.out_dir);

    std::vector<RunResult> results(static_cast<std::size_t>(config.runs));
    std::atomic<int> next_run{0};
    const auto started = std::chrono::steady_clock::now();

    auto worker = [&]() {
        for (;;) {
            const int i = next_run.fetch_add(1);
            if (i >= config.runs)
                return;
            RunResult r;
            r.run_index = i;
            r.seed = substream_seed(config.seed, static_cast<std::uint64_t>(i));
            RunOptions options;
            options.collect_trace = config.trace;
            options.w_size_init = config.w_size_init;
            const auto t0 = std::chrono::steady_clock::now();
            RunOutput out = run_optimizer(config.algo, graph, evaluator, bound,
                                          config.t_max, r.seed, options);
            const auto t1 = std::chrono::steady_clock::now();
            r.seconds = config.timing
                            ? std::chrono::duration<double>(t1 - t0).count()
                            : 0.0;
            const ScoredSolution& best = out.archive.best_feasible();
            r.best_f = best.f;
            r.best_cardinality = best.cardinality;
            r.archive_size = out.archive.size();
            if (config.trace) {
                r.trace_path = (std::filesystem::path(config.out_dir) /
                                ("trace_" + algo_name(config.algo) + "_run" +
                                 std::to_string(i) + ".csv"))
                                   .string();
                emit_trace(out.trace, r.trace_path);
            }
            results[static_cast<std::size_t>(i)] = std::move(r);
        }
    };

    const int workers = std::max(1, std::min(config.workers, config.runs));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    ExperimentSummary summary = summarize(std::move(results));
    const auto finished = std::chrono::steady_clock::now();
    summary.seconds = config.timing
                          ? std::chrono::duration<double>(finished - started).count()
                          : 0.0;
    return summary;
}

std::string results_csv_header() {
    return "graph,algo,evaluator,weights,B,alpha,tsp,tmax,runs,min,max,mean,std,"
           "mean_card,mean_popsize,seconds";
}

namespace {

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, value);
    return buf;
}

} // namespace

std::string results_csv_row(const ExperimentConfig& config, const Graph& graph,
                            const ExperimentSummary& summary) {
    const double bound = resolve_bound(config.bound, graph.n);
    std::string graph_name = std::filesystem::path(config.graph_path).stem().string();
    if (graph_name.empty())
        graph_name = config.graph_path;
    std::string row;
    row += graph_name;
    row += ',' + algo_name(config.algo);
    row += ',' + evaluator_name(config.evaluator);
    row += ',' + weights_name(config.weights);
    row += ',' + fmt("%.10g", bound);
    row += ',' + fmt("%.10g", config.alpha);
    row += ',' + std::to_string(config.t_sp);
    row += ',' + std::to_string(config.t_max);
    row += ',' + std::to_string(config.runs);
    row += ',' + std::to_string(summary.min_f);
    row += ',' + std::to_string(summary.max_f);
    row += ',' + fmt("%.3f", summary.mean_f);
    row += ',' + fmt("%.3f", summary.std_f);
    row += ',' + fmt("%.3f", summary.mean_cardinality);
    row += ',' + fmt("%.3f", summary.mean_archive_size);
    row += ',' + fmt("%.3f", summary.seconds);
    return row;
}

std::string runs_csv_header() {
    return "run,seed,best_f,best_card,popsize,seconds,trace";
}

std::string runs_csv_row(const RunResult& run) {
    std::string row;
    row += std::to_string(run.run_index);
    row += ',' + std::to_string(run.seed);
    row += ',' + std::to_string(run.best_f);
    row += ',' + std::to_string(run.best_cardinality);
    row += ',' + std::to_string(run.archive_size);
    row += ',' + fmt("%.3f", run.seconds);
    row += ',' + run.trace_path;
    return row;
}

void emit_trace(const RunTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open trace for writing: " + path);
    out << "t,weight,f,from_window,w_size\n";
    char buf[64];
    for (const TraceRecord& rec : trace.records) {
        std::snprintf(buf, sizeof(buf), "%.6g", rec.w);
        out << rec.t << ',' << buf << ',' << rec.f << ','
            << (rec.from_window ? "true" : "false") << ',' << rec.w_size << '\n';
    }
    if (!out)
        throw std::runtime_error("I/O error while writing " + path);
}

std::vector<ScoredSolution> non_dominated_filter(std::vector<ScoredSolution> solutions) {
    std::vector<ScoredSolution> front;
    for (ScoredSolution& s : solutions) {
        bool rejected = false;
        for (const ScoredSolution& m : front) {
            if (strictly_dominates(m, s)) {
                rejected = true;
                break;
            }
        }
        if (rejected)
            continue;
        std::erase_if(front, [&s](const ScoredSolution& m) { return weakly_dominates(s, m); });
        front.push_back(std::move(s));
    }
    std::sort(front.begin(), front.end(),
              [](const ScoredSolution& a, const ScoredSolution& b) { return a.f < b.f; });
    return front;
}

std::vector<ScoredSolution> brute_force_front(const Graph& graph,
                                              const ChanceEvaluator& evaluator,
                                              double bound) {
    if (graph.n < 1)
        throw std::invalid_argument("graph is empty");
    if (graph.n > 20)
        throw std::invalid_argument("brute force limited to n <= 20");
    const std::uint32_t subsets = 1u << graph.n;
    std::vector<ScoredSolution> scored;
    scored.reserve(subsets);
    BitVector bits(static_cast<std::size_t>(graph.n), 0);
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        for (int i = 0; i < graph.n; ++i)
            bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        scored.push_back(score(bits, graph, evaluator, bound));
    }
    return non_dominated_filter(std::move(scored));
}

} // namespace ccmc
