#include "stepsched/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "checked_math.hpp"

namespace stepsched {

namespace {

using int128 = __int128;

// a/b < c/d for positive denominators, without rounding.
bool ratio_less(Time a, Time b, Time c, Time d) {
    return static_cast<int128>(a) * d < static_cast<int128>(c) * b;
}

std::vector<int> ids_ascending(const Instance& instance) {
    std::vector<int> ids(static_cast<std::size_t>(instance.size()));
    std::iota(ids.begin(), ids.end(), 1);
    return ids;
}

// Shared greedy driver: repeatedly pick from the unscheduled set with
// `choose(ids, now)` returning an index into `ids`, append, advance time.
template <typename Choose>
Schedule greedy_dispatch(const Instance& instance, Choose choose) {
    std::vector<int> remaining = ids_ascending(instance);
    std::vector<int> sequence;
    sequence.reserve(remaining.size());
    Time now = 0;
    while (!remaining.empty()) {
        const std::size_t pick = choose(remaining, now);
        const int id = remaining[pick];
        now = detail::add_time(now, actual_processing_time(instance.job(id), now));
        sequence.push_back(id);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return evaluate(instance, sequence);
}

// Argmax over a double-valued priority; candidates are visited in ascending
// id order and replaced only on a strict increase, so ties keep the lowest id.
template <typename Priority>
std::size_t argmax_priority(const Instance& instance, const std::vector<int>& ids, Time now,
                            Priority priority) {
    std::size_t best = 0;
    double best_value = priority(instance.job(ids[0]), now);
    for (std::size_t k = 1; k < ids.size(); ++k) {
        const double value = priority(instance.job(ids[k]), now);
        if (value > best_value) {
            best_value = value;
            best = k;
        }
    }
    return best;
}

double mean_proc_time(const Instance& instance, const std::vector<int>& ids, Time now) {
    Time sum = 0;
    for (int id : ids) sum = detail::add_time(sum, actual_processing_time(instance.job(id), now));
    return static_cast<double>(sum) / static_cast<double>(ids.size());
}

}  // namespace

std::string_view algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::EDD: return "EDD";
        case Algorithm::WSPT: return "WSPT";
        case Algorithm::WEDD: return "WEDD";
        case Algorithm::ATC: return "ATC";
        case Algorithm::CA: return "CA";
        case Algorithm::WMDD: return "WMDD";
        case Algorithm::MSWSP: return "MSWSP";
    }
    return "?";
}

AlgorithmSpec parse_algorithm(std::string_view label) {
    AlgorithmSpec spec;
    std::string_view base = label;
    if (base.size() > 3 && base.substr(base.size() - 3) == "_PS") {
        spec.with_ps = true;
        base = base.substr(0, base.size() - 3);
    }
    for (Algorithm alg : all_algorithms) {
        if (base == algorithm_name(alg)) {
            spec.base = alg;
            return spec;
        }
    }
    throw UnknownAlgorithm("unknown algorithm '" + std::string(label) +
                           "' (expected EDD, WSPT, WEDD, ATC, CA, WMDD or MSWSP, "
                           "optionally with suffix _PS)");
}

std::string algorithm_label(AlgorithmSpec spec) {
    std::string label(algorithm_name(spec.base));
    if (spec.with_ps) label += "_PS";
    return label;
}

std::string_view to_string(PsMode mode) {
    return mode == PsMode::single_pass ? "single-pass" : "to-fixpoint";
}

PsMode parse_ps_mode(std::string_view name) {
    if (name == "single-pass") return PsMode::single_pass;
    if (name == "to-fixpoint") return PsMode::to_fixpoint;
    throw InvalidConfig("unknown PS mode '" + std::string(name) +
                        "' (expected single-pass or to-fixpoint)");
}

Schedule edd(const Instance& instance, const HeuristicConfig&) {
    std::vector<int> sequence = ids_ascending(instance);
    std::stable_sort(sequence.begin(), sequence.end(), [&](int a, int b) {
        return instance.job(a).due < instance.job(b).due;  // equal dues keep id order
    });
    return evaluate(instance, sequence);
}

Schedule wspt(const Instance& instance, const HeuristicConfig&) {
    return greedy_dispatch(instance, [&](const std::vector<int>& ids, Time now) {
        // maximize w/p, processing times taken at the current time
        std::size_t best = 0;
        Time bw = instance.job(ids[0]).weight;
        Time bp = actual_processing_time(instance.job(ids[0]), now);
        for (std::size_t k = 1; k < ids.size(); ++k) {
            const Job& job = instance.job(ids[k]);
            const Time p = actual_processing_time(job, now);
            if (ratio_less(bw, bp, job.weight, p)) {
                best = k;
                bw = job.weight;
                bp = p;
            }
        }
        return best;
    });
}

Schedule wedd(const Instance& instance, const HeuristicConfig&) {
    std::vector<int> sequence = ids_ascending(instance);
    // static sort by d/w ascending, exact rational comparison
    std::stable_sort(sequence.begin(), sequence.end(), [&](int a, int b) {
        const Job& ja = instance.job(a);
        const Job& jb = instance.job(b);
        return ratio_less(ja.due, ja.weight, jb.due, jb.weight);
    });
    return evaluate(instance, sequence);
}

Schedule atc(const Instance& instance, const HeuristicConfig& config) {
    if (config.kappa <= 0.0) throw InvalidConfig("ATC requires kappa > 0");
    const double kappa = config.kappa;
    return greedy_dispatch(instance, [&](const std::vector<int>& ids, Time now) {
        // rho averages over all unscheduled jobs, candidate included
        const double k_rho = kappa * mean_proc_time(instance, ids, now);
        return argmax_priority(instance, ids, now, [&](const Job& job, Time t) {
            const double p = static_cast<double>(actual_processing_time(job, t));
            const double slack =
                std::max(0.0, static_cast<double>(job.due) - p - static_cast<double>(t));
            return static_cast<double>(job.weight) / p * std::exp(-slack / k_rho);
        });
    });
}

Schedule ca(const Instance& instance, const HeuristicConfig& config) {
    if (config.kappa <= 0.0) throw InvalidConfig("CA requires kappa > 0");
    const double kappa = config.kappa;
    return greedy_dispatch(instance, [&](const std::vector<int>& ids, Time now) {
        const double k_rho = kappa * mean_proc_time(instance, ids, now);
        return argmax_priority(instance, ids, now, [&](const Job& job, Time t) {
            const double p = static_cast<double>(actual_processing_time(job, t));
            const double slack =
                std::max(0.0, static_cast<double>(job.due) - p - static_cast<double>(t));
            return static_cast<double>(job.weight) / p * (k_rho / (k_rho + slack));
        });
    });
}

Schedule wmdd(const Instance& instance, const HeuristicConfig&) {
    return greedy_dispatch(instance, [&](const std::vector<int>& ids, Time now) {
        // minimize max(p, d - t) / w, exact rational comparison
        auto modified_due = [&](const Job& job) {
            return std::max(actual_processing_time(job, now), job.due - now);
        };
        std::size_t best = 0;
        Time bv = modified_due(instance.job(ids[0]));
        Time bw = instance.job(ids[0]).weight;
        for (std::size_t k = 1; k < ids.size(); ++k) {
            const Job& job = instance.job(ids[k]);
            const Time v = modified_due(job);
            if (ratio_less(v, job.weight, bv, bw)) {
                best = k;
                bv = v;
                bw = job.weight;
            }
        }
        return best;
    });
}

const std::vector<GammaTriple>& mswsp_gamma_grid() {
    static const std::vector<GammaTriple> grid = [] {
        std::vector<GammaTriple> g;
        for (int g1 = 2; g1 <= 9; ++g1)
            for (int g2 = 1; g2 <= 7; ++g2)
                g.push_back({g1, g2, std::max(10 - g1 - g2, 1)});
        return g;
    }();
    return grid;
}

Schedule mswsp(const Instance& instance, const HeuristicConfig&) {
    const int n = instance.size();
    if (n == 0) return evaluate(instance, {});

    // First position is fixed across the whole grid: minimal due date.
    int first = 1;
    for (int id = 2; id <= n; ++id)
        if (instance.job(id).due < instance.job(first).due) first = id;

    std::vector<int> best_sequence;
    Objective best_z = 0;
    bool have_best = false;

    std::vector<int> remaining;
    std::vector<int> sequence;
    for (const GammaTriple& gamma : mswsp_gamma_grid()) {
        remaining = ids_ascending(instance);
        remaining.erase(remaining.begin() + (first - 1));
        sequence.clear();
        sequence.push_back(first);

        Time now = actual_processing_time(instance.job(first), 0);
        Objective z = detail::mul_objective(instance.job(first).weight,
                                            std::max<Time>(0, now - instance.job(first).due));
        while (!remaining.empty()) {
            // minimize (g1 d + g2 p + g3 h) / w; tenths cancel in the
            // cross-multiplied comparison
            std::size_t best_k = 0;
            int128 b_num = 0;
            Time b_w = 1;
            for (std::size_t k = 0; k < remaining.size(); ++k) {
                const Job& job = instance.job(remaining[k]);
                const Time p = actual_processing_time(job, now);
                const int128 num = static_cast<int128>(gamma.g1_tenths) * job.due +
                                   static_cast<int128>(gamma.g2_tenths) * p +
                                   static_cast<int128>(gamma.g3_tenths) * job.deteriorating_date;
                if (k == 0 || num * b_w < b_num * job.weight) {
                    best_k = k;
                    b_num = num;
                    b_w = job.weight;
                }
            }
            const int id = remaining[best_k];
            const Job& job = instance.job(id);
            now = detail::add_time(now, actual_processing_time(job, now));
            z = detail::add_objective(
                z, detail::mul_objective(job.weight, std::max<Time>(0, now - job.due)));
            sequence.push_back(id);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_k));
        }

        if (!have_best || z < best_z) {  // ties keep the earlier grid point
            have_best = true;
            best_z = z;
            best_sequence = sequence;
        }
    }
    return evaluate(instance, best_sequence);
}

Schedule dispatch(const Instance& instance, Algorithm alg, const HeuristicConfig& config) {
    switch (alg) {
        case Algorithm::EDD: return edd(instance, config);
        case Algorithm::WSPT: return wspt(instance, config);
        case Algorithm::WEDD: return wedd(instance, config);
        case Algorithm::ATC: return atc(instance, config);
        case Algorithm::CA: return ca(instance, config);
        case Algorithm::WMDD: return wmdd(instance, config);
        case Algorithm::MSWSP: return mswsp(instance, config);
    }
    throw UnknownAlgorithm("unhandled algorithm");
}

Schedule pairwise_swap(const Instance& instance, const Schedule& schedule, PsMode mode) {
    // evaluate() re-derives the objective and validates the permutation.
    Schedule incumbent = evaluate(instance, schedule.sequence);
    const int n = instance.size();
    if (n < 2) return incumbent;

    std::vector<int> seq = incumbent.sequence;
    Objective best = incumbent.objective;

    // prefix_c[k] / prefix_z[k]: completion time and partial objective after
    // the first k positions of the incumbent
    std::vector<Time> prefix_c(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Objective> prefix_z(static_cast<std::size_t>(n) + 1, 0);
    auto rebuild_prefixes = [&] {
        Time now = 0;
        Objective z = 0;
        for (int k = 0; k < n; ++k) {
            const Job& job = instance.job(seq[static_cast<std::size_t>(k)]);
            now = detail::add_time(now, actual_processing_time(job, now));
            if (now > job.due)
                z = detail::add_objective(z, detail::mul_objective(job.weight, now - job.due));
            prefix_c[static_cast<std::size_t>(k) + 1] = now;
            prefix_z[static_cast<std::size_t>(k) + 1] = z;
        }
    };
    rebuild_prefixes();

    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                // re-simulate from position i with i and j exchanged; the
                // partial objective only grows, so bail out at >= best
                Time now = prefix_c[static_cast<std::size_t>(i)];
                Objective z = prefix_z[static_cast<std::size_t>(i)];
                bool worse = false;
                for (int k = i; k < n; ++k) {
                    const int id = k == i ? seq[static_cast<std::size_t>(j)]
                                 : k == j ? seq[static_cast<std::size_t>(i)]
                                          : seq[static_cast<std::size_t>(k)];
                    const Job& job = instance.job(id);
                    now = detail::add_time(now, actual_processing_time(job, now));
                    if (now > job.due)
                        z = detail::add_objective(z,
                                                  detail::mul_objective(job.weight, now - job.due));
                    if (z >= best) {
                        worse = true;
                        break;
                    }
                }
                if (!worse) {
                    std::swap(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(j)]);
                    best = z;
                    rebuild_prefixes();
                    improved = true;
                }
            }
        }
        if (mode == PsMode::single_pass) break;
    }
    return evaluate(instance, seq);
}

Schedule run_with_ps(const Instance& instance, Algorithm alg, const HeuristicConfig& config) {
    return pairwise_swap(instance, dispatch(instance, alg, config), config.ps_mode);
}

Schedule run_algorithm(const Instance& instance, AlgorithmSpec spec,
                       const HeuristicConfig& config) {
    return spec.with_ps ? run_with_ps(instance, spec.base, config)
                        : dispatch(instance, spec.base, config);
}

}  // namespace stepsched
