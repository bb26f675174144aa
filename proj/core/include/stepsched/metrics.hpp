#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stepsched/types.hpp"

namespace stepsched {

/// Relative percentage deviation (z_alg - z_opt) / z_opt * 100.
/// Throws DivisionUndefined when z_opt == 0.
double rpd(Objective z_alg, Objective z_opt);

/// Relative improvement versus the worst result. 0 when best == worst,
/// otherwise (z_worst - z_alg) / z_worst * 100. Requires
/// z_best <= z_alg <= z_worst (ContractViolation otherwise).
double rivw(Objective z_alg, Objective z_worst, Objective z_best);

/// Relative improvement of the optimum versus the heuristic. 0 when equal,
/// otherwise (z_alg - z_opt) / z_alg * 100. Requires z_opt <= z_alg.
double rivh(Objective z_alg, Objective z_opt);

/// One instance's objectives, parallel to the algorithm list handed to
/// tally()/compare_pair().
struct ComparisonRow {
    std::string instance_id;
    std::vector<Objective> objectives;
    std::optional<Objective> optimum;
};

struct AlgorithmSummary {
    std::string algorithm;
    double mean_rivw = 0.0;
    long num_best = 0;  // ties credit every tied algorithm
    std::optional<double> mean_rivh;  // present when every row has an optimum
    std::optional<long> num_opt;
};

/// Per-algorithm aggregates over the rows. RIVW is computed within each row
/// against that row's best/worst objective. Mean RIVH and num_opt are filled
/// only when all rows carry an optimum. Row order does not matter.
std::vector<AlgorithmSummary> tally(std::span<const ComparisonRow> rows,
                                    const std::vector<std::string>& algorithms);

struct PairCount {
    long num_better = 0;  // rows where `a` is strictly smaller than `b`
    long num_equal = 0;
};

PairCount compare_pair(std::span<const ComparisonRow> rows,
                       const std::vector<std::string>& algorithms,
                       const std::string& a, const std::string& b);

struct LsdInterval {
    std::string algorithm;
    double mean = 0.0;
    double half_width = 0.0;  // lo = mean - half_width, hi = mean + half_width
};

struct LsdResult {
    std::vector<LsdInterval> intervals;
    double lsd = 0.0;     // least significant difference of two means
    double mse = 0.0;     // within-group mean square
    long df = 0;          // N - k
    double t_crit = 0.0;  // two-sided Student-t quantile at 1 - alpha/2
};

/// One-way fixed-effects ANOVA over equally sized groups, yielding
/// Fisher-LSD means-plot intervals with half-width t * sqrt(MSE / (2m)),
/// so two intervals overlap exactly when |mean difference| < LSD.
/// Requires >= 2 groups of equal size m >= 2 (DegenerateInput otherwise).
LsdResult lsd_intervals(const std::vector<std::vector<double>>& samples,
                        const std::vector<std::string>& names,
                        double alpha = 0.05);

}  // namespace stepsched
