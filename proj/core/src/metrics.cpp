#include "stepsched/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/students_t.hpp>

namespace stepsched {

double rpd(Objective z_alg, Objective z_opt) {
    if (z_opt == 0)
        throw DivisionUndefined("RPD undefined for a zero optimum; use RIVW instead");
    return static_cast<double>(z_alg - z_opt) / static_cast<double>(z_opt) * 100.0;
}

double rivw(Objective z_alg, Objective z_worst, Objective z_best) {
    if (z_best > z_alg || z_alg > z_worst)
        throw ContractViolation("RIVW requires z_best <= z_alg <= z_worst");
    if (z_best == z_worst) return 0.0;
    return static_cast<double>(z_worst - z_alg) / static_cast<double>(z_worst) * 100.0;
}

double rivh(Objective z_alg, Objective z_opt) {
    if (z_opt > z_alg) throw ContractViolation("RIVH requires z_opt <= z_alg");
    if (z_opt == z_alg) return 0.0;
    return static_cast<double>(z_alg - z_opt) / static_cast<double>(z_alg) * 100.0;
}

std::vector<AlgorithmSummary> tally(std::span<const ComparisonRow> rows,
                                    const std::vector<std::string>& algorithms) {
    const std::size_t k = algorithms.size();
    std::vector<AlgorithmSummary> summaries(k);
    for (std::size_t a = 0; a < k; ++a) summaries[a].algorithm = algorithms[a];
    if (rows.empty()) return summaries;

    bool all_have_optimum = true;
    for (const ComparisonRow& row : rows) {
        if (row.objectives.size() != k)
            throw ContractViolation("tally: row '" + row.instance_id + "' has " +
                                    std::to_string(row.objectives.size()) +
                                    " objectives, expected " + std::to_string(k));
        if (!row.optimum) all_have_optimum = false;
    }

    std::vector<double> rivw_sum(k, 0.0);
    std::vector<double> rivh_sum(k, 0.0);
    std::vector<long> best_count(k, 0);
    std::vector<long> opt_count(k, 0);
    for (const ComparisonRow& row : rows) {
        const Objective z_best = *std::min_element(row.objectives.begin(), row.objectives.end());
        const Objective z_worst = *std::max_element(row.objectives.begin(), row.objectives.end());
        for (std::size_t a = 0; a < k; ++a) {
            const Objective z = row.objectives[a];
            rivw_sum[a] += rivw(z, z_worst, z_best);
            if (z == z_best) ++best_count[a];  // ties credit every tied algorithm
            if (all_have_optimum) {
                rivh_sum[a] += rivh(z, *row.optimum);
                if (z == *row.optimum) ++opt_count[a];
            }
        }
    }

    const double count = static_cast<double>(rows.size());
    for (std::size_t a = 0; a < k; ++a) {
        summaries[a].mean_rivw = rivw_sum[a] / count;
        summaries[a].num_best = best_count[a];
        if (all_have_optimum) {
            summaries[a].mean_rivh = rivh_sum[a] / count;
            summaries[a].num_opt = opt_count[a];
        }
    }
    return summaries;
}

PairCount compare_pair(std::span<const ComparisonRow> rows,
                       const std::vector<std::string>& algorithms, const std::string& a,
                       const std::string& b) {
    const auto find = [&](const std::string& name) {
        const auto it = std::find(algorithms.begin(), algorithms.end(), name);
        if (it == algorithms.end())
            throw ContractViolation("compare_pair: algorithm '" + name + "' not in the row set");
        return static_cast<std::size_t>(it - algorithms.begin());
    };
    const std::size_t ia = find(a);
    const std::size_t ib = find(b);
    PairCount out;
    for (const ComparisonRow& row : rows) {
        if (row.objectives[ia] < row.objectives[ib]) ++out.num_better;
        if (row.objectives[ia] == row.objectives[ib]) ++out.num_equal;
    }
    return out;
}

LsdResult lsd_intervals(const std::vector<std::vector<double>>& samples,
                        const std::vector<std::string>& names, double alpha) {
    const std::size_t k = samples.size();
    if (k < 2) throw DegenerateInput("LSD needs at least two groups");
    if (names.size() != k) throw DegenerateInput("LSD: one name per group required");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidConfig("LSD: alpha must lie in (0, 1)");
    const std::size_t m = samples[0].size();
    if (m < 2) throw DegenerateInput("LSD needs at least two samples per group");
    for (const auto& group : samples)
        if (group.size() != m) throw DegenerateInput("LSD requires equal group sizes");

    LsdResult result;
    result.df = static_cast<long>(k * m - k);

    double sse = 0.0;
    std::vector<double> means(k, 0.0);
    for (std::size_t g = 0; g < k; ++g) {
        double sum = 0.0;
        for (double x : samples[g]) sum += x;
        means[g] = sum / static_cast<double>(m);
        for (double x : samples[g]) sse += (x - means[g]) * (x - means[g]);
    }
    result.mse = sse / static_cast<double>(result.df);

    const boost::math::students_t dist(static_cast<double>(result.df));
    result.t_crit = boost::math::quantile(dist, 1.0 - alpha / 2.0);
    result.lsd = result.t_crit * std::sqrt(2.0 * result.mse / static_cast<double>(m));

    const double half_width = result.lsd / 2.0;
    result.intervals.reserve(k);
    for (std::size_t g = 0; g < k; ++g)
        result.intervals.push_back({names[g], means[g], half_width});
    return result;
}

}  // namespace stepsched
