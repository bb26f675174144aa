#pragma once

#include <span>
#include <vector>

#include "stepsched/types.hpp"

namespace stepsched {

/// A sequence together with its derived timing data. The per-job vectors
/// (start, proc_time, completion, tardiness) are indexed by job id - 1,
/// not by sequence position.
struct Schedule {
    std::vector<int> sequence;
    std::vector<Time> start;
    std::vector<Time> proc_time;
    std::vector<Time> completion;
    std::vector<Time> tardiness;
    Objective objective = 0;  // Z = sum of w_j * T_j
};

/// Step processing-time function. The boundary start == deteriorating_date
/// still takes the basic time.
inline Time actual_processing_time(const Job& job, Time start) {
    return start <= job.deteriorating_date ? job.basic_time
                                           : job.basic_time + job.penalty;
}

/// Simulate the sequence with no inserted idle time: the first job starts at
/// 0 and each job starts at the previous completion. Throws
/// InvalidPermutation unless `sequence` is a permutation of the instance's
/// job ids; throws OverflowError if the objective leaves the 64-bit range.
Schedule evaluate(const Instance& instance, std::span<const int> sequence);

/// Objective of the sequence without materializing a Schedule.
Objective objective_of(const Instance& instance, std::span<const int> sequence);

namespace detail {
// Same as objective_of but skips the permutation check; callers guarantee
// the sequence is a valid permutation.
Objective objective_unchecked(const Instance& instance, std::span<const int> sequence);
}  // namespace detail

}  // namespace stepsched
