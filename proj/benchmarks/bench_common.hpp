#pragma once

#include "stepsched/generator.hpp"
#include "stepsched/types.hpp"

namespace benchutil {

inline stepsched::Instance make_instance(int n, std::uint64_t seed = 2024) {
    stepsched::GeneratorConfig config;
    config.n = n;
    config.h_class = stepsched::HClass::H3;
    config.tardiness_factor = 0.6;
    config.due_range = 0.4;
    config.seed = seed;
    return stepsched::generate(config);
}

}  // namespace benchutil
