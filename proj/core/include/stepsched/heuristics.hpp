#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "stepsched/schedule.hpp"
#include "stepsched/types.hpp"

namespace stepsched {

enum class Algorithm { EDD, WSPT, WEDD, ATC, CA, WMDD, MSWSP };

inline constexpr std::array<Algorithm, 7> all_algorithms{
    Algorithm::EDD,  Algorithm::WSPT, Algorithm::WEDD, Algorithm::ATC,
    Algorithm::CA,   Algorithm::WMDD, Algorithm::MSWSP};

std::string_view algorithm_name(Algorithm alg);

/// Base algorithm plus an optional pairwise-swap improvement pass.
/// Canonical labels are "EDD", ..., "MSWSP" and "EDD_PS", ..., "MSWSP_PS".
struct AlgorithmSpec {
    Algorithm base = Algorithm::EDD;
    bool with_ps = false;

    bool operator==(const AlgorithmSpec&) const = default;
};

AlgorithmSpec parse_algorithm(std::string_view label);  // throws UnknownAlgorithm
std::string algorithm_label(AlgorithmSpec spec);

enum class PsMode { single_pass, to_fixpoint };

std::string_view to_string(PsMode mode);
PsMode parse_ps_mode(std::string_view name);  // throws InvalidConfig

struct HeuristicConfig {
    double kappa = 0.5;                      // ATC/CA look-ahead
    PsMode ps_mode = PsMode::single_pass;
};

// The seven dispatching rules. Each returns a fully evaluated Schedule.
// Every priority tie is broken toward the lowest job id.
Schedule edd(const Instance& instance, const HeuristicConfig& config = {});
Schedule wspt(const Instance& instance, const HeuristicConfig& config = {});
Schedule wedd(const Instance& instance, const HeuristicConfig& config = {});
Schedule atc(const Instance& instance, const HeuristicConfig& config = {});
Schedule ca(const Instance& instance, const HeuristicConfig& config = {});
Schedule wmdd(const Instance& instance, const HeuristicConfig& config = {});
Schedule mswsp(const Instance& instance, const HeuristicConfig& config = {});

Schedule dispatch(const Instance& instance, Algorithm alg,
                  const HeuristicConfig& config = {});

/// One sweep walks all position pairs (i, j), i < j, in lexicographic order
/// against the current incumbent; a strictly improving swap replaces the
/// incumbent immediately and the sweep continues from the next pair.
/// single_pass does exactly one sweep of n(n-1)/2 exchanges; to_fixpoint
/// repeats sweeps until one completes without an improvement. The result is
/// never worse than the input.
Schedule pairwise_swap(const Instance& instance, const Schedule& schedule,
                       PsMode mode = PsMode::single_pass);

/// dispatch() followed by pairwise_swap() with config.ps_mode.
Schedule run_with_ps(const Instance& instance, Algorithm alg,
                     const HeuristicConfig& config = {});

/// Base algorithm, or the _PS composition when spec.with_ps is set.
Schedule run_algorithm(const Instance& instance, AlgorithmSpec spec,
                       const HeuristicConfig& config = {});

/// MSWSP mixing weights in tenths: g1 in {2..9}, g2 in {1..7},
/// g3 = max(10 - g1 - g2, 1). 56 triples, g1-major order.
struct GammaTriple {
    int g1_tenths;
    int g2_tenths;
    int g3_tenths;
};
const std::vector<GammaTriple>& mswsp_gamma_grid();

}  // namespace stepsched
