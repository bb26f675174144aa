#pragma once

#include <cstdint>
#include <string_view>

#include "stepsched/schedule.hpp"
#include "stepsched/types.hpp"

namespace stepsched {

enum class ExactMethod { brute_force, branch_and_bound };

std::string_view to_string(ExactMethod method);

struct ExactResult {
    Schedule schedule;
    Objective optimum = 0;  // == schedule.objective
    std::uint64_t nodes_explored = 0;
    ExactMethod method = ExactMethod::brute_force;
};

inline constexpr int kBruteForceDefaultCap = 10;
inline constexpr int kBnbDefaultCap = 14;

/// Enumerates all n! permutations in lexicographic order and keeps the first
/// minimum, so ties resolve to the lexicographically smallest sequence.
/// Throws TooLarge when n exceeds the cap.
ExactResult solve_brute_force(const Instance& instance,
                              int max_n = kBruteForceDefaultCap);

/// Depth-first search over sequence prefixes. The bound is the partial
/// objective, valid because tardiness terms are non-negative and a prefix's
/// contribution never shrinks when the suffix is appended. The initial
/// incumbent is the best of the seven dispatching heuristics with the
/// pairwise-swap pass. Throws TooLarge when n exceeds the cap.
ExactResult solve_bnb(const Instance& instance, int max_n = kBnbDefaultCap);

}  // namespace stepsched
