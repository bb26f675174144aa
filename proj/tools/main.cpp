#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stepsched/bench.hpp"
#include "stepsched/exact.hpp"
#include "stepsched/generator.hpp"
#include "stepsched/heuristics.hpp"
#include "stepsched/io.hpp"
#include "stepsched/mip.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw stepsched::IoError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw stepsched::IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw stepsched::IoError("write to '" + path.string() + "' failed");
}

struct GenOptions {
    int n = 0;
    std::string h_class = "H3";
    double t_factor = 0.5;
    double r = 0.5;
    double tau = 0.5;
    std::uint64_t seed = 0;
    std::string out;
};

struct SuiteOptions {
    std::vector<int> sizes;
    int replicates = 10;
    std::uint64_t master_seed = 0;
    double tau = 0.5;
    std::string out_dir;
};

struct SolveOptions {
    std::string instance;
    std::string algorithm;
    bool exact = false;
    std::string method = "bnb";
    int exact_max_n = 0;  // 0: method default (14 for bnb, 10 for brute)
    double kappa = 0.5;
    std::string ps_mode = "single-pass";
};

struct ReportOptions {
    std::string raw;
    std::string out_dir;
    std::vector<std::string> pairs;
    std::vector<std::string> exclude;
    bool means_plot = false;
};

int run_gen(const GenOptions& opt) {
    stepsched::GeneratorConfig config;
    config.n = opt.n;
    config.h_class = stepsched::parse_h_class(opt.h_class);
    config.tardiness_factor = opt.t_factor;
    config.due_range = opt.r;
    config.tau = opt.tau;
    config.seed = opt.seed;
    const stepsched::Instance instance = stepsched::generate(config);
    if (opt.out.empty())
        std::cout << stepsched::instance_to_json(instance);
    else
        stepsched::save_instance(instance, opt.out);
    return 0;
}

int run_suite(const SuiteOptions& opt) {
    stepsched::SuiteConfig config;
    config.sizes = opt.sizes;
    config.replicates = opt.replicates;
    config.master_seed = opt.master_seed;
    config.tau = opt.tau;
    fs::create_directories(opt.out_dir);
    const auto plan = stepsched::suite_plan(config);
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const int replicate =
            static_cast<int>(i % static_cast<std::size_t>(config.replicates)) + 1;
        const fs::path file =
            fs::path(opt.out_dir) /
            (stepsched::suite_instance_name(plan[i], replicate) + ".json");
        stepsched::save_instance(stepsched::generate(plan[i]), file);
        std::cout << file.string() << '\n';
    }
    return 0;
}

int run_solve(const SolveOptions& opt) {
    const stepsched::Instance instance = stepsched::load_instance(opt.instance);
    ordered_json out;
    if (opt.exact) {
        const bool brute = opt.method == "brute";
        const int cap = opt.exact_max_n > 0
                            ? opt.exact_max_n
                            : (brute ? stepsched::kBruteForceDefaultCap : stepsched::kBnbDefaultCap);
        const stepsched::ExactResult result = brute ? stepsched::solve_brute_force(instance, cap)
                                                    : stepsched::solve_bnb(instance, cap);
        out["method"] = stepsched::to_string(result.method);
        out["z_star"] = result.optimum;
        out["sequence"] = result.schedule.sequence;
        out["nodes"] = result.nodes_explored;
    } else {
        const stepsched::AlgorithmSpec spec = stepsched::parse_algorithm(opt.algorithm);
        stepsched::HeuristicConfig config;
        config.kappa = opt.kappa;
        config.ps_mode = stepsched::parse_ps_mode(opt.ps_mode);
        const stepsched::Schedule schedule =
            stepsched::run_algorithm(instance, spec, config);
        out["algorithm"] = stepsched::algorithm_label(spec);
        out["sequence"] = schedule.sequence;
        out["Z"] = schedule.objective;
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int run_export_lp(const std::string& instance_path, const std::string& out_path) {
    const stepsched::Instance instance = stepsched::load_instance(instance_path);
    const std::string lp = stepsched::export_lp(instance);
    if (out_path.empty())
        std::cout << lp;
    else
        write_file(out_path, lp);
    return 0;
}

int run_bench(const std::string& plan_path) {
    const stepsched::RunPlan plan = stepsched::plan_from_json(read_file(plan_path));
    const stepsched::BenchReport report = stepsched::run_plan(plan);
    for (const stepsched::BenchFailure& failure : report.failures)
        std::cerr << "failed: " << failure.instance_id << ": " << failure.error << '\n';
    if (plan.out_dir.empty())
        stepsched::write_raw_csv(report, std::cout);
    else
        std::cout << (fs::path(plan.out_dir) / "raw.csv").string() << '\n';
    return 0;
}

int run_report(const ReportOptions& opt) {
    std::ifstream in(opt.raw, std::ios::binary);
    if (!in) throw stepsched::IoError("cannot open '" + opt.raw + "'");
    const stepsched::BenchReport report = stepsched::read_raw_csv(in);

    std::vector<std::pair<std::string, std::string>> pairs;
    for (const std::string& spec : opt.pairs) {
        const std::size_t colon = spec.find(':');
        if (colon == std::string::npos)
            throw stepsched::InvalidConfig("--pair expects ALG_A:ALG_B, got '" + spec + "'");
        pairs.emplace_back(spec.substr(0, colon), spec.substr(colon + 1));
    }

    if (opt.out_dir.empty()) {
        if (opt.means_plot || !pairs.empty()) {
            std::cerr << "report: --pair and --means-plot need --out-dir\n";
            return 1;
        }
        std::cout << stepsched::summary_csv(report);
        return 0;
    }
    fs::create_directories(opt.out_dir);
    const fs::path dir(opt.out_dir);
    write_file(dir / "summary.csv", stepsched::summary_csv(report));
    write_file(dir / "summary.json", stepsched::summary_json(report));
    std::cout << (dir / "summary.csv").string() << '\n'
              << (dir / "summary.json").string() << '\n';
    if (opt.means_plot) {
        write_file(dir / "means_plot.csv", stepsched::means_plot_csv(report, opt.exclude));
        std::cout << (dir / "means_plot.csv").string() << '\n';
    }
    if (!pairs.empty()) {
        write_file(dir / "pairs.csv", stepsched::pairs_csv(report, pairs));
        std::cout << (dir / "pairs.csv").string() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-machine weighted-tardiness scheduling with step-deteriorating jobs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "stepsched 1.0.0");

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--n", gen_opt.n, "Number of jobs");
    gen->add_option("--h-class", gen_opt.h_class, "Deteriorating-date class (H1, H2, H3)");
    gen->add_option("--t-factor", gen_opt.t_factor, "Tardiness factor T in (0, 1]");
    gen->add_option("--r", gen_opt.r, "Due-date range R in (0, 1]");
    gen->add_option("--tau", gen_opt.tau, "Deterioration penalty factor");
    gen->add_option("--seed", gen_opt.seed, "Generator seed");
    gen->add_option("--out", gen_opt.out, "Output file (.json or .csv); stdout when omitted");

    SuiteOptions suite_opt;
    CLI::App* suite = gen->add_subcommand("suite", "Generate a full factorial suite");
    suite->add_option("--sizes", suite_opt.sizes, "Problem sizes")->required();
    suite->add_option("--replicates", suite_opt.replicates, "Replicates per combination");
    suite->add_option("--master-seed", suite_opt.master_seed, "Master seed");
    suite->add_option("--tau", suite_opt.tau, "Deterioration penalty factor");
    suite->add_option("--out-dir", suite_opt.out_dir, "Directory for instance files")->required();

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
    solve->add_option("instance", solve_opt.instance, "Instance file")->required();
    CLI::Option* alg_opt =
        solve->add_option("--alg", solve_opt.algorithm, "Heuristic label, e.g. CA or CA_PS");
    CLI::Option* exact_opt = solve->add_flag("--exact", solve_opt.exact, "Solve to optimality");
    alg_opt->excludes(exact_opt);
    solve->add_option("--method", solve_opt.method, "Exact method: bnb or brute")
        ->check(CLI::IsMember({"bnb", "brute"}));
    solve->add_option("--exact-max-n", solve_opt.exact_max_n, "Exact size cap");
    solve->add_option("--kappa", solve_opt.kappa, "ATC/CA look-ahead parameter");
    solve->add_option("--ps-mode", solve_opt.ps_mode, "single-pass or to-fixpoint");

    std::string lp_instance;
    std::string lp_out;
    CLI::App* export_lp = app.add_subcommand("export-lp", "Write the instance's MIP as LP text");
    export_lp->add_option("instance", lp_instance, "Instance file")->required();
    export_lp->add_option("--out", lp_out, "Output LP file; stdout when omitted");

    std::string plan_path;
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark plan");
    bench->add_option("--plan", plan_path, "Plan JSON file")->required();

    ReportOptions report_opt;
    CLI::App* report = app.add_subcommand("report", "Aggregate raw bench results");
    report->add_option("--raw", report_opt.raw, "raw.csv from a bench run")->required();
    report->add_option("--out-dir", report_opt.out_dir, "Directory for report files");
    report->add_option("--pair", report_opt.pairs, "Pairwise comparison ALG_A:ALG_B");
    report->add_flag("--means-plot", report_opt.means_plot, "Emit LSD means-plot data");
    report->add_option("--exclude", report_opt.exclude, "Drop algorithm from the means plot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (suite->parsed()) return run_suite(suite_opt);
        if (gen->parsed()) {
            if (gen_opt.n < 1) {
                std::cerr << "gen: --n is required\n";
                return 1;
            }
            return run_gen(gen_opt);
        }
        if (solve->parsed()) {
            if (!solve_opt.exact && solve_opt.algorithm.empty()) {
                std::cerr << "solve: pass --alg NAME or --exact\n";
                return 1;
            }
            return run_solve(solve_opt);
        }
        if (export_lp->parsed()) return run_export_lp(lp_instance, lp_out);
        if (bench->parsed()) return run_bench(plan_path);
        if (report->parsed()) return run_report(report_opt);
    } catch (const stepsched::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
