#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stepsched/errors.hpp"

namespace stepsched {

// All times and objectives are exact 64-bit integers; overflow in any
// computation is a checked error, never silent wraparound.
using Time = std::int64_t;
using Weight = std::int64_t;
using Objective = std::int64_t;

/// A job with a step processing time: it takes basic_time when it starts no
/// later than its deteriorating date, and basic_time + penalty afterwards.
struct Job {
    int id = 0;                   // 1-based
    Time basic_time = 1;          // a
    Time penalty = 1;             // b, added once the job starts late
    Time due = 0;                 // d
    Time deteriorating_date = 0;  // h, latest start without the penalty
    Weight weight = 1;            // w

    bool operator==(const Job&) const = default;
};

// Sampling interval class for deteriorating dates, relative to the total
// basic processing time A: H1 = [1, A/2], H2 = [A/2, A], H3 = [1, A].
enum class HClass { H1 = 1, H2 = 2, H3 = 3 };

std::string to_string(HClass h);
HClass parse_h_class(const std::string& name);  // throws InvalidConfig

struct GenerationMeta {
    HClass h_class = HClass::H3;
    double tardiness_factor = 0.0;  // T
    double due_range = 0.0;         // R
    double tau = 0.0;
    std::uint64_t seed = 0;
    Time cmax_prime = 0;

    bool operator==(const GenerationMeta&) const = default;
};

/// A job set with ids 1..n (no gaps, no duplicates) plus optional
/// generation metadata. Immutable after construction.
class Instance {
  public:
    Instance() = default;
    explicit Instance(std::vector<Job> jobs,
                      std::optional<GenerationMeta> meta = std::nullopt);

    int size() const { return static_cast<int>(jobs_.size()); }
    bool empty() const { return jobs_.empty(); }

    /// Lookup by 1-based job id.
    const Job& job(int id) const { return jobs_[static_cast<std::size_t>(id) - 1]; }

    const std::vector<Job>& jobs() const { return jobs_; }
    const std::optional<GenerationMeta>& meta() const { return meta_; }

  private:
    std::vector<Job> jobs_;  // invariant: jobs_[i].id == i + 1
    std::optional<GenerationMeta> meta_;
};

}  // namespace stepsched
