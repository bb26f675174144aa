#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stepsched/generator.hpp"
#include "stepsched/heuristics.hpp"
#include "stepsched/metrics.hpp"
#include "stepsched/types.hpp"

namespace stepsched {

/// What to run: instances come either from explicit files/directories or
/// from a generated suite (which is persisted under out_dir first, so every
/// result can be reproduced from files).
struct RunPlan {
    std::vector<std::string> instance_paths;  // files or directories of .json/.csv
    std::optional<SuiteConfig> suite;
    std::vector<std::string> algorithms;      // canonical labels, may use _PS
    bool exact = false;                       // also solve each instance exactly
    int exact_max_n = 14;
    double kappa = 0.5;
    PsMode ps_mode = PsMode::single_pass;
    int threads = 1;
    std::string out_dir;  // raw CSV + generated instances; empty = in-memory only
};

RunPlan plan_from_json(const std::string& text);  // throws InvalidConfig

struct BenchRow {
    std::string instance_id;
    int n = 0;
    std::string h_class;  // blank when the instance has no metadata
    double t_factor = 0.0;
    double due_range = 0.0;
    bool has_meta = false;
    std::vector<Objective> objectives;  // parallel to report.algorithms
    std::vector<double> millis;
    std::optional<Objective> optimum;
};

struct BenchFailure {
    std::string instance_id;
    std::string error;
};

struct BenchReport {
    std::vector<std::string> algorithms;
    std::vector<BenchRow> rows;        // instance order, independent of threads
    std::vector<BenchFailure> failures;
    bool with_exact = false;
};

/// Runs every requested algorithm (and optionally the exact solver) on every
/// instance. Per-instance failures are collected, not fatal. Results are
/// identical for any `threads` value. When out_dir is set the raw results
/// are persisted to out_dir/raw.csv before any aggregation.
BenchReport run_plan(const RunPlan& plan);

// Raw results in long form:
//   instance_id,n,h_class,T,R,algorithm,Z,millis[,z_opt]
void write_raw_csv(const BenchReport& report, std::ostream& out);
BenchReport read_raw_csv(std::istream& in);  // throws IoError on malformed input

/// Rows for metrics::tally, dropping failed instances.
std::vector<ComparisonRow> comparison_rows(const BenchReport& report);

struct KappaSweepCell {
    double kappa = 0.0;
    std::string algorithm;
    double mean_objective = 0.0;
};

struct KappaSweepResult {
    std::vector<KappaSweepCell> cells;           // kappa-major, then algorithm
    std::map<std::string, double> best_kappa;    // argmin of mean objective
};

inline const std::vector<double> kKappaGrid{0.5, 1.0, 1.5, 2.0, 2.5,
                                            3.0, 3.5, 4.0, 4.5};

/// Mean objective per kappa per algorithm over the given instances; only
/// ATC and CA are meaningful here (they are the kappa-dependent rules).
KappaSweepResult kappa_sweep(const std::vector<Instance>& instances,
                             const std::vector<Algorithm>& algorithms,
                             const std::vector<double>& kappas = kKappaGrid);

// Report emission (Table-shaped CSVs). Summary columns:
//   n,algorithm,mean_rivw,num_best[,mean_rivh,num_opt]
// with one block per problem size and a final "all" block.
std::string summary_csv(const BenchReport& report);
std::string summary_json(const BenchReport& report);
/// Means-plot data `algorithm,mean,lo,hi` from per-instance RIVW samples.
std::string means_plot_csv(const BenchReport& report,
                           const std::vector<std::string>& exclude = {});
/// Pairwise better/equal counts, one block per size plus "all":
///   n,algorithm_a,algorithm_b,num_better,num_equal
std::string pairs_csv(const BenchReport& report,
                      const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace stepsched
