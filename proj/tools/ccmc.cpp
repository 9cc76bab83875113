#include "ccmc/experiment.hpp"
#include "ccmc/stats.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CommonOpts {
    ccmc::ExperimentConfig config;
    std::string algo = "asw";
    std::string weights = "iid";
    std::string evaluator = "sample";
};

void add_model_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--graph", opts.config.graph_path, "edge-list graph file")->required();
    cmd->add_option("--weights", opts.weights, "weight model: iid|degree")
        ->check(CLI::IsMember({"iid", "degree"}));
    cmd->add_option("--evaluator", opts.evaluator, "constraint evaluator: cheb|chen|sample")
        ->check(CLI::IsMember({"cheb", "chen", "sample"}));
    cmd->add_option("--alpha", opts.config.alpha, "violation probability in (0,1)");
    cmd->add_option("--bound", opts.config.bound, "bound: half-n2, n2, or a number");
    cmd->add_option("--tsp", opts.config.t_sp, "samples per element (sampling evaluator)");
    cmd->add_option("--seed", opts.config.seed, "64-bit master seed");
}

void add_run_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--algo", opts.algo, "algorithm: gsemo|sw|asw")
        ->check(CLI::IsMember({"gsemo", "sw", "asw"}));
    cmd->add_option("--tmax", opts.config.t_max, "iteration budget");
    cmd->add_option("--out", opts.config.out_dir, "output directory");
    cmd->add_flag("--trace", opts.config.trace, "emit per-run trace CSVs");
    cmd->add_option("--workers", opts.config.workers, "worker pool size");
    cmd->add_option("--wsize-init", opts.config.w_size_init,
                    "initial adaptive window size");
    cmd->add_flag_callback(
        "--no-timing", [&opts]() { opts.config.timing = false; },
        "write wall-time fields as 0 (reproducible output)");
}

void finalize(CommonOpts& opts) {
    opts.config.algo = ccmc::parse_algo(opts.algo);
    opts.config.weights = ccmc::parse_weights(opts.weights);
    opts.config.evaluator = ccmc::parse_evaluator(opts.evaluator);
}

ccmc::WeightModel build_model(const ccmc::ExperimentConfig& config,
                              const ccmc::Graph& graph) {
    return config.weights == ccmc::WeightKind::Iid
               ? ccmc::make_iid_model(static_cast<std::size_t>(graph.n))
               : ccmc::make_degree_model(graph);
}

int run_cell(CommonOpts& opts, bool write_files) {
    finalize(opts);
    const ccmc::Graph graph = ccmc::load_graph(opts.config.graph_path);
    std::cerr << "loaded " << opts.config.graph_path << ": n=" << graph.n
              << " edges=" << graph.edge_count << '\n';
    const ccmc::ExperimentSummary summary = ccmc::run_experiment(opts.config, graph);
    std::cout << ccmc::results_csv_header() << '\n'
              << ccmc::results_csv_row(opts.config, graph, summary) << '\n';
    if (write_files) {
        namespace fs = std::filesystem;
        fs::create_directories(opts.config.out_dir);
        std::ofstream results(fs::path(opts.config.out_dir) / "results.csv");
        results << ccmc::results_csv_header() << '\n'
                << ccmc::results_csv_row(opts.config, graph, summary) << '\n';
        std::ofstream runs(fs::path(opts.config.out_dir) / "runs.csv");
        runs << ccmc::runs_csv_header() << '\n';
        for (const ccmc::RunResult& r : summary.runs)
            runs << ccmc::runs_csv_row(r) << '\n';
        if (!results || !runs) {
            std::cerr << "failed to write result files in " << opts.config.out_dir << '\n';
            return 1;
        }
    }
    return 0;
}

std::vector<double> read_best_f_column(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open results file: " + path);
    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("empty results file: " + path);
    int column = -1;
    {
        std::istringstream hs(header);
        std::string name;
        for (int i = 0; std::getline(hs, name, ','); ++i)
            if (name == "best_f")
                column = i;
    }
    if (column < 0)
        throw std::runtime_error(path + " has no best_f column");
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string field;
        for (int i = 0; std::getline(ls, field, ','); ++i)
            if (i == column)
                values.push_back(std::stod(field));
    }
    if (values.empty())
        throw std::runtime_error("no data rows in " + path);
    return values;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chance-constrained maximum coverage via Pareto optimization"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; flags override");

    CommonOpts run_opts, trace_opts, exp_opts, bf_opts, gen_opts;

    CLI::App* run_cmd = app.add_subcommand("run", "one algorithm, one seed");
    add_model_flags(run_cmd, run_opts);
    add_run_flags(run_cmd, run_opts);

    CLI::App* trace_cmd =
        app.add_subcommand("trace", "one seeded run with trace emission");
    add_model_flags(trace_cmd, trace_opts);
    add_run_flags(trace_cmd, trace_opts);

    CLI::App* exp_cmd = app.add_subcommand("experiment", "full config matrix cell");
    add_model_flags(exp_cmd, exp_opts);
    add_run_flags(exp_cmd, exp_opts);
    exp_cmd->add_option("--runs", exp_opts.config.runs, "independent runs");

    CLI::App* gen_cmd = app.add_subcommand("gen-samples", "persist a sample manifest");
    add_model_flags(gen_cmd, gen_opts);
    std::string gen_out = ".";
    bool gen_dump = false;
    gen_cmd->add_option("--out", gen_out, "output directory");
    gen_cmd->add_flag("--dump", gen_dump, "also write the full binary dump");

    CLI::App* bf_cmd = app.add_subcommand("brute-force", "exact Pareto front, n <= 20");
    add_model_flags(bf_cmd, bf_opts);

    CLI::App* stats_cmd = app.add_subcommand("stats", "statistics utilities");
    CLI::App* compare_cmd =
        stats_cmd->add_subcommand("compare", "Kruskal-Wallis on two runs.csv files");
    std::vector<std::string> compare_files;
    compare_cmd->add_option("files", compare_files, "two per-run result files")
        ->expected(2);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            run_opts.config.runs = 1;
            return run_cell(run_opts, !run_opts.config.out_dir.empty());
        }
        if (*trace_cmd) {
            trace_opts.config.runs = 1;
            trace_opts.config.trace = true;
            if (trace_opts.config.out_dir.empty()) {
                std::cerr << "trace requires --out\n";
                return 1;
            }
            return run_cell(trace_opts, true);
        }
        if (*exp_cmd) {
            if (exp_opts.config.out_dir.empty()) {
                std::cerr << "experiment requires --out\n";
                return 1;
            }
            return run_cell(exp_opts, true);
        }
        if (*gen_cmd) {
            finalize(gen_opts);
            const ccmc::Graph graph = ccmc::load_graph(gen_opts.config.graph_path);
            const ccmc::WeightModel model = build_model(gen_opts.config, graph);
            const ccmc::SampleMatrix matrix =
                ccmc::generate_samples(model, gen_opts.config.t_sp, gen_opts.config.seed);
            namespace fs = std::filesystem;
            fs::create_directories(gen_out);
            const auto manifest_path = fs::path(gen_out) / "samples.manifest";
            ccmc::write_manifest(ccmc::make_manifest(model, matrix),
                                 manifest_path.string());
            std::cout << "wrote " << manifest_path.string() << '\n';
            if (gen_dump) {
                const auto dump_path = fs::path(gen_out) / "samples.ccsm";
                ccmc::write_dump(matrix, dump_path.string());
                std::cout << "wrote " << dump_path.string() << '\n';
            }
            return 0;
        }
        if (*bf_cmd) {
            finalize(bf_opts);
            const ccmc::Graph graph = ccmc::load_graph(bf_opts.config.graph_path);
            const ccmc::WeightModel model = build_model(bf_opts.config, graph);
            ccmc::SampleMatrix matrix;
            ccmc::ChanceEvaluator evaluator{bf_opts.config.evaluator,
                                            bf_opts.config.alpha, &model, nullptr};
            if (bf_opts.config.evaluator == ccmc::EvaluatorKind::Sampling) {
                matrix = ccmc::generate_samples(model, bf_opts.config.t_sp,
                                                bf_opts.config.seed);
                evaluator.samples = &matrix;
            }
            const double bound = ccmc::resolve_bound(bf_opts.config.bound, graph.n);
            std::cout << "f,w,card\n";
            char buf[64];
            for (const ccmc::ScoredSolution& s :
                 ccmc::brute_force_front(graph, evaluator, bound)) {
                std::snprintf(buf, sizeof(buf), "%.6g", s.w);
                std::cout << s.f << ',' << buf << ',' << s.cardinality << '\n';
            }
            return 0;
        }
        if (*compare_cmd) {
            const std::vector<std::vector<double>> groups = {
                read_best_f_column(compare_files[0]),
                read_best_f_column(compare_files[1])};
            const ccmc::KruskalWallisResult kw = ccmc::kruskal_wallis(groups);
            std::printf("H=%.6f p=%.6g\n", kw.h, kw.p_value);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
