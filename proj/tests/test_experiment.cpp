#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "ccmc/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ccmc;

TEST_CASE("bound resolution") {
    CHECK(resolve_bound("half-n2", 15) == 112.0); // floor(225 / 2)
    CHECK(resolve_bound("n2", 15) == 225.0);
    CHECK(resolve_bound("42.5", 15) == 42.5);
    CHECK_THROWS(resolve_bound("0", 15));
    CHECK_THROWS(resolve_bound("-3", 15));
    CHECK_THROWS(resolve_bound("3x", 15));
}

TEST_CASE("name round trips") {
    for (Algo a : {Algo::Gsemo, Algo::SlidingWindow, Algo::AdaptiveSlidingWindow})
        CHECK(parse_algo(algo_name(a)) == a);
    for (EvaluatorKind e :
         {EvaluatorKind::Chebyshev, EvaluatorKind::Chernoff, EvaluatorKind::Sampling})
        CHECK(parse_evaluator(evaluator_name(e)) == e);
    for (WeightKind w : {WeightKind::Iid, WeightKind::DegreeBased})
        CHECK(parse_weights(weights_name(w)) == w);
    CHECK_THROWS(parse_algo("nsga2"));
}

TEST_CASE("brute force front on K3") {
    const Graph g = test::complete_graph(3);
    const WeightModel m = make_iid_model(3);
    ChanceEvaluator cheb{EvaluatorKind::Chebyshev, 0.5, &m, nullptr};
    const auto front = brute_force_front(g, cheb, 9.0);
    REQUIRE(front.size() == 2);
    CHECK(front[0].f == 0);
    CHECK(front[0].w == 0.0);
    CHECK(front[1].f == 3);
    CHECK(front[1].w == doctest::Approx(3.0 + std::sqrt(3.0)));

    CHECK_THROWS(brute_force_front(Graph{}, cheb, 9.0));
    Graph too_big;
    too_big.n = 21;
    CHECK_THROWS(brute_force_front(too_big, cheb, 9.0));
}

TEST_CASE("brute force front matches archive inserts in any order") {
    SplitMix64 rng(2211);
    const Graph g = test::random_graph(8, 0.3, rng);
    const WeightModel m = make_iid_model(8);
    ChanceEvaluator cheb{EvaluatorKind::Chebyshev, 0.2, &m, nullptr};
    const double bound = resolve_bound("half-n2", g.n);
    const auto front = brute_force_front(g, cheb, bound);

    std::vector<std::uint32_t> order(256);
    for (std::uint32_t i = 0; i < 256; ++i)
        order[i] = i;
    for (int perm = 0; perm < 5; ++perm) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.next_below(i)]);
        ParetoArchive archive;
        BitVector bits(8, 0);
        for (std::uint32_t mask : order) {
            for (int b = 0; b < 8; ++b)
                bits[static_cast<std::size_t>(b)] = (mask >> b) & 1u;
            archive.insert(score(bits, g, cheb, bound));
        }
        REQUIRE(archive.size() == front.size());
        for (std::size_t i = 0; i < front.size(); ++i) {
            CHECK(archive.members()[i].f == front[i].f);
            CHECK(archive.members()[i].w == doctest::Approx(front[i].w));
        }
    }
}

TEST_CASE("single run with t_max = 0 aggregates to zeros") {
    SplitMix64 rng(4);
    const Graph g = test::random_graph(12, 0.3, rng);
    ExperimentConfig config;
    config.algo = Algo::Gsemo;
    config.evaluator = EvaluatorKind::Chebyshev;
    config.t_max = 0;
    config.runs = 1;
    config.seed = 9;
    const ExperimentSummary summary = run_experiment(config, g);
    CHECK(summary.min_f == 0);
    CHECK(summary.max_f == 0);
    CHECK(summary.mean_f == 0.0);
    CHECK(summary.std_f == 0.0);
    CHECK(summary.mean_archive_size == 1.0);
}

TEST_CASE("summary aggregates reproduce from per-run results") {
    SplitMix64 rng(8675309);
    const Graph g = test::random_graph(20, 0.2, rng);
    ExperimentConfig config;
    config.algo = Algo::AdaptiveSlidingWindow;
    config.evaluator = EvaluatorKind::Sampling;
    config.t_sp = 30;
    config.t_max = 2000;
    config.runs = 5;
    config.seed = 31415;
    const ExperimentSummary summary = run_experiment(config, g);
    REQUIRE(summary.runs.size() == 5);

    const ExperimentSummary again = summarize(summary.runs);
    CHECK(again.min_f == summary.min_f);
    CHECK(again.max_f == summary.max_f);
    CHECK(again.mean_f == summary.mean_f);
    CHECK(again.std_f == summary.std_f);
    CHECK(again.mean_cardinality == summary.mean_cardinality);
    CHECK(again.mean_archive_size == summary.mean_archive_size);

    // run seeds follow the documented derivation
    for (const RunResult& r : summary.runs)
        CHECK(r.seed == substream_seed(config.seed,
                                       static_cast<std::uint64_t>(r.run_index)));
}

TEST_CASE("worker pool produces the same results as sequential execution") {
    SplitMix64 rng(2121);
    const Graph g = test::random_graph(16, 0.25, rng);
    ExperimentConfig config;
    config.algo = Algo::Gsemo;
    config.evaluator = EvaluatorKind::Chernoff;
    config.t_max = 1500;
    config.runs = 4;
    config.seed = 5;
    config.timing = false;
    const ExperimentSummary sequential = run_experiment(config, g);
    config.workers = 4;
    const ExperimentSummary pooled = run_experiment(config, g);
    REQUIRE(sequential.runs.size() == pooled.runs.size());
    for (std::size_t i = 0; i < sequential.runs.size(); ++i) {
        CHECK(sequential.runs[i].best_f == pooled.runs[i].best_f);
        CHECK(sequential.runs[i].archive_size == pooled.runs[i].archive_size);
    }
}

TEST_CASE("CSV schema") {
    CHECK(results_csv_header() ==
          "graph,algo,evaluator,weights,B,alpha,tsp,tmax,runs,min,max,mean,std,"
          "mean_card,mean_popsize,seconds");
    CHECK(runs_csv_header() == "run,seed,best_f,best_card,popsize,seconds,trace");

    SplitMix64 rng(3);
    const Graph g = test::random_graph(10, 0.3, rng);
    ExperimentConfig config;
    config.graph_path = "/data/toy-graph.txt";
    config.algo = Algo::Gsemo;
    config.evaluator = EvaluatorKind::Chebyshev;
    config.t_max = 100;
    config.runs = 2;
    config.timing = false;
    const ExperimentSummary summary = run_experiment(config, g);
    const std::string row = results_csv_row(config, g, summary);
    std::istringstream rs(row);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(rs, field, ','))
        fields.push_back(field);
    REQUIRE(fields.size() == 16);
    CHECK(fields[0] == "toy-graph");
    CHECK(fields[1] == "gsemo");
    CHECK(fields[2] == "cheb");
    CHECK(fields[3] == "iid");
    CHECK(fields[4] == "50"); // floor(100 / 2)
    CHECK(fields[15] == "0.000");
}

TEST_CASE("trace emission") {
    const std::string path = "/tmp/ccmc_test_trace.csv";

    SUBCASE("empty trace writes only the header") {
        emit_trace(RunTrace{}, path);
        std::ifstream in(path);
        std::string line;
        REQUIRE(std::getline(in, line));
        CHECK(line == "t,weight,f,from_window,w_size");
        CHECK_FALSE(std::getline(in, line));
    }

    SUBCASE("records serialize one per line") {
        RunTrace trace;
        trace.records.push_back({0, 0.0, 0, false, 1});
        trace.records.push_back({17, 12345.678, 42, true, 3});
        emit_trace(trace, path);
        std::ifstream in(path);
        std::string line;
        std::getline(in, line);
        std::getline(in, line);
        CHECK(line == "0,0,0,false,1");
        std::getline(in, line);
        CHECK(line == "17,12345.7,42,true,3");
    }
}
