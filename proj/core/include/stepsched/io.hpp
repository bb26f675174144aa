#pragma once

#include <filesystem>
#include <string>

#include "stepsched/types.hpp"

namespace stepsched {

// Canonical interchange formats. JSON:
//   {"n": 2, "jobs": [{"id":1,"a":2,"b":3,"d":2,"h":1,"w":1}, ...],
//    "meta": {...}}          (meta optional)
// CSV: header `id,a,b,d,h,w`, one row per job, no metadata.
// Serialization is byte-deterministic so that same-seed generation
// reproduces identical files.

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string instance_to_csv(const Instance& instance);
Instance instance_from_csv(const std::string& text);

/// Format picked by extension (.json / .csv).
void save_instance(const Instance& instance, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

}  // namespace stepsched
