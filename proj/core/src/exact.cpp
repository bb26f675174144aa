#include "stepsched/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "checked_math.hpp"
#include "stepsched/heuristics.hpp"

namespace stepsched {

std::string_view to_string(ExactMethod method) {
    return method == ExactMethod::brute_force ? "brute-force" : "branch-and-bound";
}

ExactResult solve_brute_force(const Instance& instance, int max_n) {
    const int n = instance.size();
    if (n > max_n)
        throw TooLarge("brute force refused: n = " + std::to_string(n) + " exceeds cap " +
                       std::to_string(max_n));

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);

    std::vector<int> best_sequence = perm;
    Objective best = detail::objective_unchecked(instance, perm);
    std::uint64_t evaluated = 1;
    while (std::next_permutation(perm.begin(), perm.end())) {
        ++evaluated;
        const Objective z = detail::objective_unchecked(instance, perm);
        // strict improvement keeps the lexicographically first optimum
        if (z < best) {
            best = z;
            best_sequence = perm;
        }
    }
    return {evaluate(instance, best_sequence), best, evaluated, ExactMethod::brute_force};
}

ExactResult solve_bnb(const Instance& instance, int max_n) {
    const int n = instance.size();
    if (n > max_n)
        throw TooLarge("branch and bound refused: n = " + std::to_string(n) + " exceeds cap " +
                       std::to_string(max_n));
    if (n == 0) return {evaluate(instance, {}), 0, 0, ExactMethod::branch_and_bound};

    // Incumbent: best of the seven dispatching heuristics with the PS pass.
    const HeuristicConfig config{};
    Objective best = std::numeric_limits<Objective>::max();
    std::vector<int> best_sequence;
    for (Algorithm alg : all_algorithms) {
        Schedule s = run_with_ps(instance, alg, config);
        if (s.objective < best) {
            best = s.objective;
            best_sequence = std::move(s.sequence);
        }
    }

    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t nodes = 0;

    auto dfs = [&](auto&& self, Time now, Objective partial) -> void {
        if (prefix.size() == static_cast<std::size_t>(n)) {
            // every extension was bound-checked, so partial < best here
            best = partial;
            best_sequence = prefix;
            return;
        }
        for (int id = 1; id <= n; ++id) {
            if (used[static_cast<std::size_t>(id)]) continue;
            const Job& job = instance.job(id);
            const Time c = detail::add_time(now, actual_processing_time(job, now));
            Objective z = partial;
            if (c > job.due)
                z = detail::add_objective(z, detail::mul_objective(job.weight, c - job.due));
            ++nodes;
            if (z >= best) continue;  // partial objective is a valid lower bound
            used[static_cast<std::size_t>(id)] = 1;
            prefix.push_back(id);
            self(self, c, z);
            prefix.pop_back();
            used[static_cast<std::size_t>(id)] = 0;
        }
    };
    dfs(dfs, 0, 0);

    return {evaluate(instance, best_sequence), best, nodes, ExactMethod::branch_and_bound};
}

}  // namespace stepsched
