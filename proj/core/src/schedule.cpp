#include "stepsched/schedule.hpp"

#include <algorithm>
#include <string>

#include "checked_math.hpp"

namespace stepsched {

namespace {

void check_permutation(const Instance& instance, std::span<const int> sequence) {
    const int n = instance.size();
    if (sequence.size() != static_cast<std::size_t>(n))
        throw InvalidPermutation("sequence length " + std::to_string(sequence.size()) +
                                 " does not match instance size " + std::to_string(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int id : sequence) {
        if (id < 1 || id > n)
            throw InvalidPermutation("job id " + std::to_string(id) + " out of range 1.." +
                                     std::to_string(n));
        char& flag = seen[static_cast<std::size_t>(id) - 1];
        if (flag) throw InvalidPermutation("job id " + std::to_string(id) + " appears twice");
        flag = 1;
    }
}

}  // namespace

Schedule evaluate(const Instance& instance, std::span<const int> sequence) {
    check_permutation(instance, sequence);
    const std::size_t n = sequence.size();

    Schedule out;
    out.sequence.assign(sequence.begin(), sequence.end());
    out.start.resize(n);
    out.proc_time.resize(n);
    out.completion.resize(n);
    out.tardiness.resize(n);

    Time now = 0;
    Objective z = 0;
    for (int id : sequence) {
        const Job& job = instance.job(id);
        const Time p = actual_processing_time(job, now);
        const Time c = detail::add_time(now, p);
        const Time tardy = std::max<Time>(0, c - job.due);
        const std::size_t slot = static_cast<std::size_t>(id) - 1;
        out.start[slot] = now;
        out.proc_time[slot] = p;
        out.completion[slot] = c;
        out.tardiness[slot] = tardy;
        z = detail::add_objective(z, detail::mul_objective(job.weight, tardy));
        now = c;
    }
    out.objective = z;
    return out;
}

Objective objective_of(const Instance& instance, std::span<const int> sequence) {
    check_permutation(instance, sequence);
    return detail::objective_unchecked(instance, sequence);
}

namespace detail {

Objective objective_unchecked(const Instance& instance, std::span<const int> sequence) {
    Time now = 0;
    Objective z = 0;
    for (int id : sequence) {
        const Job& job = instance.job(id);
        const Time c = add_time(now, actual_processing_time(job, now));
        if (c > job.due) z = add_objective(z, mul_objective(job.weight, c - job.due));
        now = c;
    }
    return z;
}

}  // namespace detail

}  // namespace stepsched
