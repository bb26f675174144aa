#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stepsched/types.hpp"

namespace stepsched {

struct GeneratorConfig {
    int n = 0;
    double tau = 0.5;               // deterioration penalty factor
    HClass h_class = HClass::H3;
    double tardiness_factor = 0.5;  // T
    double due_range = 0.5;         // R
    std::uint64_t seed = 0;
};

/// Makespan of the sequence sorted by a_j / b_j ascending (exact rational
/// comparison, ties toward the lowest id), with deterioration applied.
Time cmax_prime(const Instance& instance);

/// Random instance: a ~ U{1..100}, w ~ U{1..10}, b ~ U{1..floor(100 tau)},
/// h ~ U over the h_class interval with A = sum of a, then d ~ U over
/// [ceil(C'max (1-T-R/2)), floor(C'max (1-T+R/2))] clamped below at 0.
/// Deterministic given the seed. Throws InvalidConfig.
Instance generate(const GeneratorConfig& config);

inline constexpr std::array<int, 14> kSuiteSizes{8,  10, 15,  20,  25,  30,  40,
                                                 50, 75, 100, 250, 500, 750, 1000};
// T and R grid in tenths: {0.2, 0.4, 0.6, 0.8, 1.0}.
inline constexpr std::array<int, 5> kFactorTenths{2, 4, 6, 8, 10};

struct SuiteConfig {
    std::vector<int> sizes;  // subset of kSuiteSizes
    int replicates = 10;
    std::uint64_t master_seed = 0;
    double tau = 0.5;
};

/// Full factorial 3 H-classes x 5 T x 5 R x replicates per size, in
/// (size, H, T, R, replicate) order; 750 configs per size at 10 replicates.
/// Each member's seed is derived from (master_seed, n, H, T, R, replicate).
std::vector<GeneratorConfig> suite_plan(const SuiteConfig& config);
std::vector<Instance> experiment_suite(const SuiteConfig& config);

/// Canonical file stem for a suite member, e.g. "n15_H2_T04_R06_rep3".
std::string suite_instance_name(const GeneratorConfig& config, int replicate);

/// Hardness-reduction instance family: 3t partition jobs whose basic times
/// must split into t triples summing to `target`, plus t-1 heavy enforcer
/// jobs pinning the triple boundaries.
struct ReductionSpec {
    long long triples = 0;              // t
    long long target = 0;               // b, must be divisible by 4
    std::vector<Time> partition_times;  // a_1..a_{3t}, each in (b/4, b/2)
};

/// Builds the 4t-1 job instance. Throws SpecViolation when the bounds, the
/// triple-sum total, or the divisibility requirement on `target` fail.
Instance reduction_instance(const ReductionSpec& spec);

/// Closed-form objective of the canonical schedule of a partitionable spec.
Objective z_star(const ReductionSpec& spec);

/// Triples in index order with the i-th enforcer after the i-th triple.
std::vector<int> reduction_canonical_sequence(const ReductionSpec& spec);

}  // namespace stepsched
