#include "stepsched/types.hpp"

#include <algorithm>
#include <utility>

namespace stepsched {

std::string to_string(HClass h) {
    switch (h) {
        case HClass::H1: return "H1";
        case HClass::H2: return "H2";
        case HClass::H3: return "H3";
    }
    return "H?";
}

HClass parse_h_class(const std::string& name) {
    if (name == "H1" || name == "h1" || name == "1") return HClass::H1;
    if (name == "H2" || name == "h2" || name == "2") return HClass::H2;
    if (name == "H3" || name == "h3" || name == "3") return HClass::H3;
    throw InvalidConfig("unknown h-class '" + name + "' (expected H1, H2 or H3)");
}

Instance::Instance(std::vector<Job> jobs, std::optional<GenerationMeta> meta)
    : jobs_(std::move(jobs)), meta_(std::move(meta)) {
    std::sort(jobs_.begin(), jobs_.end(),
              [](const Job& a, const Job& b) { return a.id < b.id; });
    const int n = static_cast<int>(jobs_.size());
    for (int i = 0; i < n; ++i) {
        const Job& job = jobs_[static_cast<std::size_t>(i)];
        if (job.id != i + 1)
            throw InvalidInstance("job ids must be 1..n without gaps or duplicates");
        if (job.basic_time < 1)
            throw InvalidInstance("job " + std::to_string(job.id) + ": basic time must be >= 1");
        if (job.penalty < 1)
            throw InvalidInstance("job " + std::to_string(job.id) + ": penalty must be >= 1");
        if (job.weight < 1)
            throw InvalidInstance("job " + std::to_string(job.id) + ": weight must be >= 1");
        // d = 0 is admitted (the reduction family needs it); negatives are not.
        if (job.due < 0)
            throw InvalidInstance("job " + std::to_string(job.id) + ": due date must be >= 0");
        if (job.deteriorating_date < 0)
            throw InvalidInstance("job " + std::to_string(job.id) +
                                  ": deteriorating date must be >= 0");
    }
}

}  // namespace stepsched
