#include "stepsched/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <iomanip>
#include <sstream>
#include <string>

#include "checked_math.hpp"
#include "stepsched/rng.hpp"
#include "stepsched/schedule.hpp"

namespace stepsched {

namespace {

using int128 = __int128;

// floor / ceil of num/den for den > 0 and possibly negative num
Time floor_div(Time num, Time den) {
    return num >= 0 ? num / den : -((-num + den - 1) / den);
}

Time ceil_div(Time num, Time den) {
    return num > 0 ? (num + den - 1) / den : -((-num) / den);
}

void validate(const GeneratorConfig& config) {
    if (config.n < 1) throw InvalidConfig("generator: n must be >= 1");
    if (!(config.tau > 0.0)) throw InvalidConfig("generator: tau must be > 0");
    if (static_cast<Time>(std::floor(100.0 * config.tau)) < 1)
        throw InvalidConfig("generator: floor(100 tau) must be >= 1");
    if (!(config.tardiness_factor > 0.0) || config.tardiness_factor > 1.0)
        throw InvalidConfig("generator: tardiness factor T must lie in (0, 1]");
    if (!(config.due_range > 0.0) || config.due_range > 1.0)
        throw InvalidConfig("generator: due-date range R must lie in (0, 1]");
}

void validate(const ReductionSpec& spec) {
    const long long t = spec.triples;
    const long long b = spec.target;
    if (t < 1) throw SpecViolation("reduction: t must be >= 1");
    if (b < 4 || b % 4 != 0)
        throw SpecViolation("reduction: b must be a positive multiple of 4 so that the "
                            "partition weights a_j - b/4 stay integral");
    if (spec.partition_times.size() != static_cast<std::size_t>(3 * t))
        throw SpecViolation("reduction: expected exactly 3t basic times, got " +
                            std::to_string(spec.partition_times.size()));
    Time sum = 0;
    for (Time a : spec.partition_times) {
        if (4 * a <= b || 2 * a >= b)
            throw SpecViolation("reduction: basic time " + std::to_string(a) +
                                " outside the open interval (b/4, b/2)");
        sum = detail::add_time(sum, a);
    }
    if (sum != t * b)
        throw SpecViolation("reduction: basic times sum to " + std::to_string(sum) +
                            ", expected t*b = " + std::to_string(t * b));
}

Weight enforcer_weight(const ReductionSpec& spec) {
    const Objective bb = detail::add_objective(
        spec.target, detail::mul_objective(spec.target, spec.target));       // b + b^2
    const Objective tt = spec.triples * spec.triples - spec.triples;         // t^2 - t
    return detail::mul_objective(bb, tt);
}

}  // namespace

Time cmax_prime(const Instance& instance) {
    std::vector<int> order(static_cast<std::size_t>(instance.size()));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        const Job& a = instance.job(lhs);
        const Job& b = instance.job(rhs);
        return static_cast<int128>(a.basic_time) * b.penalty <
               static_cast<int128>(b.basic_time) * a.penalty;
    });
    Time now = 0;
    for (int id : order)
        now = detail::add_time(now, actual_processing_time(instance.job(id), now));
    return now;
}

Instance generate(const GeneratorConfig& config) {
    validate(config);
    const int n = config.n;
    SplitMix64 rng(config.seed);

    std::vector<Job> jobs(static_cast<std::size_t>(n));
    const Time b_upper = static_cast<Time>(std::floor(100.0 * config.tau));
    Time total_basic = 0;
    for (int i = 0; i < n; ++i) {
        Job& job = jobs[static_cast<std::size_t>(i)];
        job.id = i + 1;
        job.basic_time = rng.uniform_int(1, 100);
        job.weight = rng.uniform_int(1, 10);
        job.penalty = rng.uniform_int(1, b_upper);
        total_basic += job.basic_time;
    }

    Time h_lo = 1;
    Time h_hi = total_basic;
    switch (config.h_class) {
        case HClass::H1: h_hi = std::max<Time>(1, total_basic / 2); break;
        case HClass::H2: h_lo = (total_basic + 1) / 2; break;
        case HClass::H3: break;
    }
    for (Job& job : jobs) job.deteriorating_date = rng.uniform_int(h_lo, h_hi);

    // C'max needs a and h only; due dates are still the placeholder 0.
    const Time cmax = cmax_prime(Instance(jobs));

    // Window endpoints in exact arithmetic: T and R are snapped to micro
    // units, so 1 - T -+ R/2 = (2e6 - 2 Ts -+ Rs) / 2e6.
    const Time t_micro = static_cast<Time>(std::llround(config.tardiness_factor * 1e6));
    const Time r_micro = static_cast<Time>(std::llround(config.due_range * 1e6));
    const Time denom = 2'000'000;
    const Time d_lo =
        std::max<Time>(0, ceil_div(cmax * (denom - 2 * t_micro - r_micro), denom));
    const Time d_hi =
        std::max<Time>(0, floor_div(cmax * (denom - 2 * t_micro + r_micro), denom));
    for (Job& job : jobs) job.due = rng.uniform_int(d_lo, std::max(d_lo, d_hi));

    GenerationMeta meta;
    meta.h_class = config.h_class;
    meta.tardiness_factor = config.tardiness_factor;
    meta.due_range = config.due_range;
    meta.tau = config.tau;
    meta.seed = config.seed;
    meta.cmax_prime = cmax;
    return Instance(std::move(jobs), meta);
}

std::vector<GeneratorConfig> suite_plan(const SuiteConfig& config) {
    if (config.replicates < 1) throw InvalidConfig("suite: replicates must be >= 1");
    for (int n : config.sizes) {
        if (std::find(kSuiteSizes.begin(), kSuiteSizes.end(), n) == kSuiteSizes.end())
            throw InvalidConfig("suite: size " + std::to_string(n) +
                                " is not one of the supported problem sizes");
    }
    std::vector<GeneratorConfig> plan;
    for (int n : config.sizes) {
        for (HClass h : {HClass::H1, HClass::H2, HClass::H3}) {
            for (int t10 : kFactorTenths) {
                for (int r10 : kFactorTenths) {
                    for (int rep = 1; rep <= config.replicates; ++rep) {
                        GeneratorConfig g;
                        g.n = n;
                        g.tau = config.tau;
                        g.h_class = h;
                        g.tardiness_factor = t10 / 10.0;
                        g.due_range = r10 / 10.0;
                        g.seed = derive_seed(
                            config.master_seed,
                            {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(h),
                             static_cast<std::uint64_t>(t10), static_cast<std::uint64_t>(r10),
                             static_cast<std::uint64_t>(rep)});
                        plan.push_back(g);
                    }
                }
            }
        }
    }
    return plan;
}

std::vector<Instance> experiment_suite(const SuiteConfig& config) {
    std::vector<Instance> instances;
    for (const GeneratorConfig& g : suite_plan(config)) instances.push_back(generate(g));
    return instances;
}

std::string suite_instance_name(const GeneratorConfig& config, int replicate) {
    std::ostringstream name;
    name << 'n' << config.n << '_' << to_string(config.h_class) << "_T" << std::setw(2)
         << std::setfill('0') << std::llround(config.tardiness_factor * 10) << "_R"
         << std::setw(2) << std::setfill('0') << std::llround(config.due_range * 10) << "_rep"
         << replicate;
    return name.str();
}

Instance reduction_instance(const ReductionSpec& spec) {
    validate(spec);
    const long long t = spec.triples;
    const Time b = spec.target;
    std::vector<Job> jobs;
    jobs.reserve(static_cast<std::size_t>(4 * t - 1));

    const Time partition_h = t * b + 2 * (t - 1);
    for (long long j = 1; j <= 3 * t; ++j) {
        Job job;
        job.id = static_cast<int>(j);
        job.basic_time = spec.partition_times[static_cast<std::size_t>(j - 1)];
        job.penalty = 1;
        job.due = 0;
        job.deteriorating_date = partition_h;
        job.weight = job.basic_time - b / 4;
        jobs.push_back(job);
    }
    const Weight heavy = enforcer_weight(spec);
    for (long long j = 3 * t + 1; j <= 4 * t - 1; ++j) {
        Job job;
        job.id = static_cast<int>(j);
        job.basic_time = 1;
        job.penalty = 1;
        job.due = (j - 3 * t) * (b + 1);
        job.deteriorating_date = job.due - 1;
        job.weight = heavy;
        jobs.push_back(job);
    }
    return Instance(std::move(jobs));
}

Objective z_star(const ReductionSpec& spec) {
    validate(spec);
    const long long t = spec.triples;
    const Time b = spec.target;

    // (t^2 - t)(b + b^2) / 8 is integral: t^2 - t is even and 4 | b.
    const int128 first = static_cast<int128>(t * t - t) * (b + b * b);
    if (first % 8 != 0) throw SpecViolation("reduction: enforcer term not divisible by 8");

    int128 second = 0;
    Time block_prefix = 0;  // sum of a_j over the current triple's leading jobs
    for (long long k = 1; k <= 3 * t; ++k) {
        if ((k - 1) % 3 == 0) block_prefix = 0;
        const Time a_k = spec.partition_times[static_cast<std::size_t>(k - 1)];
        block_prefix += a_k;
        second += static_cast<int128>(block_prefix) * (a_k - b / 4);
    }

    const int128 total = first / 8 + second;
    if (total > std::numeric_limits<Objective>::max())
        throw OverflowError("z* overflows 64-bit objective");
    return static_cast<Objective>(total);
}

std::vector<int> reduction_canonical_sequence(const ReductionSpec& spec) {
    validate(spec);
    const long long t = spec.triples;
    std::vector<int> sequence;
    sequence.reserve(static_cast<std::size_t>(4 * t - 1));
    for (long long i = 1; i <= t; ++i) {
        sequence.push_back(static_cast<int>(3 * i - 2));
        sequence.push_back(static_cast<int>(3 * i - 1));
        sequence.push_back(static_cast<int>(3 * i));
        if (i < t) sequence.push_back(static_cast<int>(3 * t + i));
    }
    return sequence;
}

}  // namespace stepsched
