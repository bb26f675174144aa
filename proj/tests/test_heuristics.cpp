#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "stepsched/exact.hpp"
#include "stepsched/heuristics.hpp"
#include "stepsched/schedule.hpp"
#include "test_helpers.hpp"

using namespace stepsched;
using testutil::two_job_instance;

namespace {

Instance uniform_weight_instance(SplitMix64& rng, int n, Weight w) {
    std::vector<Job> jobs;
    for (int i = 1; i <= n; ++i) {
        jobs.push_back(Job{i, rng.uniform_int(1, 20), rng.uniform_int(1, 10),
                           rng.uniform_int(0, 80), rng.uniform_int(0, 60), w});
    }
    return Instance(std::move(jobs));
}

Instance zero_due_instance(SplitMix64& rng, int n) {
    std::vector<Job> jobs;
    for (int i = 1; i <= n; ++i) {
        jobs.push_back(Job{i, rng.uniform_int(1, 20), rng.uniform_int(1, 10), 0,
                           rng.uniform_int(0, 60), rng.uniform_int(1, 10)});
    }
    return Instance(std::move(jobs));
}

}  // namespace

TEST_CASE("algorithm labels parse and print") {
    CHECK(parse_algorithm("CA") == AlgorithmSpec{Algorithm::CA, false});
    CHECK(parse_algorithm("CA_PS") == AlgorithmSpec{Algorithm::CA, true});
    CHECK(parse_algorithm("MSWSP_PS") == AlgorithmSpec{Algorithm::MSWSP, true});
    CHECK(algorithm_label({Algorithm::WMDD, true}) == "WMDD_PS");
    CHECK_THROWS_AS(parse_algorithm("XYZ"), UnknownAlgorithm);
    CHECK_THROWS_AS(parse_algorithm("ca"), UnknownAlgorithm);
    CHECK_THROWS_AS(parse_algorithm("_PS"), UnknownAlgorithm);
}

TEST_CASE("EDD") {
    const Instance e2 = two_job_instance();
    CHECK(edd(e2).sequence == std::vector<int>{1, 2});
    CHECK(edd(e2).objective == 0);

    const Instance tie{{Job{1, 2, 1, 5, 9, 1}, Job{2, 2, 1, 5, 9, 1}}};
    CHECK(edd(tie).sequence == std::vector<int>{1, 2});  // tie -> lowest id

    const Instance one{{Job{1, 2, 1, 5, 9, 1}}};
    CHECK(edd(one).sequence == std::vector<int>{1});
}

TEST_CASE("WSPT recomputes processing times dynamically") {
    const Instance e2 = two_job_instance();
    const Schedule s = wspt(e2);
    CHECK(s.sequence == std::vector<int>{2, 1});
    CHECK(s.objective == 5);

    SUBCASE("reduces to SPT when weights and dues are flat and h is huge") {
        SplitMix64 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Job> jobs;
            const int n = 6;
            for (int i = 1; i <= n; ++i)
                jobs.push_back(Job{i, rng.uniform_int(1, 50), 1, 0, 100000, 1});
            const Instance inst{std::move(jobs)};
            const Schedule got = wspt(inst);
            for (std::size_t k = 1; k < got.sequence.size(); ++k) {
                const Job& prev = inst.job(got.sequence[k - 1]);
                const Job& next = inst.job(got.sequence[k]);
                const bool ascending_a =
                    prev.basic_time < next.basic_time ||
                    (prev.basic_time == next.basic_time && prev.id < next.id);
                CHECK(ascending_a);
            }
        }
    }
    SUBCASE("single job") {
        const Instance one{{Job{1, 2, 1, 5, 9, 1}}};
        CHECK(wspt(one).sequence == std::vector<int>{1});
    }
}

TEST_CASE("WEDD sorts by d/w with exact rationals") {
    const Instance e2 = two_job_instance();
    CHECK(wedd(e2).sequence == std::vector<int>{1, 2});  // 2/1 vs 5/2
    CHECK(wedd(e2).objective == 0);

    const Instance swap{{Job{1, 2, 1, 4, 9, 1}, Job{2, 2, 1, 6, 9, 2}}};
    CHECK(wedd(swap).sequence == std::vector<int>{2, 1});  // values 4 vs 3

    // 2/1 and 4/2 are the same rational: tie -> id order
    const Instance tie{{Job{1, 2, 1, 2, 9, 1}, Job{2, 2, 1, 4, 9, 2}}};
    CHECK(wedd(tie).sequence == std::vector<int>{1, 2});

    SUBCASE("equal weights degenerate to EDD") {
        SplitMix64 rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            const Instance inst = uniform_weight_instance(rng, 7, 4);
            CHECK(wedd(inst).sequence == edd(inst).sequence);
        }
    }
}

TEST_CASE("ATC") {
    const Instance e2 = two_job_instance();
    // at t=0: rho=2, kappa*rho=1, priorities 0.5 e^0 vs 1.0 e^-3
    const Schedule s = atc(e2);
    CHECK(s.sequence == std::vector<int>{1, 2});
    CHECK(s.objective == 0);

    CHECK_THROWS_AS(atc(e2, HeuristicConfig{0.0, PsMode::single_pass}), InvalidConfig);

    const Instance one{{Job{1, 2, 1, 5, 9, 1}}};
    CHECK(atc(one).sequence == std::vector<int>{1});
}

TEST_CASE("CA") {
    const Instance e2 = two_job_instance();
    // at t=0: priorities 0.5 * 1/(1+0) vs 1.0 * 1/(1+3)
    const Schedule s = ca(e2);
    CHECK(s.sequence == std::vector<int>{1, 2});
    CHECK(s.objective == 0);

    const Instance one{{Job{1, 2, 1, 5, 9, 1}}};
    CHECK(ca(one).sequence == std::vector<int>{1});
}

TEST_CASE("zero due dates collapse ATC and CA onto WSPT") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 12));
        const Instance inst = zero_due_instance(rng, n);
        const std::vector<int> reference = wspt(inst).sequence;
        CHECK(atc(inst).sequence == reference);
        CHECK(ca(inst).sequence == reference);
    }
}

TEST_CASE("WMDD") {
    const Instance e2 = two_job_instance();
    // at t=0: max(2,2)/1 = 2 vs max(2,5)/2 = 2.5
    const Schedule s = wmdd(e2);
    CHECK(s.sequence == std::vector<int>{1, 2});
    CHECK(s.objective == 0);

    SUBCASE("flat weights reduce to the MDD rule") {
        SplitMix64 rng(15);
        for (int trial = 0; trial < 30; ++trial) {
            const Instance inst = uniform_weight_instance(rng, 7, 3);
            // reference MDD: greedy argmin of max(p_j, d_j - t), lowest id on ties
            std::vector<int> remaining;
            for (int i = 1; i <= inst.size(); ++i) remaining.push_back(i);
            std::vector<int> expected;
            Time now = 0;
            while (!remaining.empty()) {
                std::size_t best = 0;
                Time best_value = 0;
                for (std::size_t k = 0; k < remaining.size(); ++k) {
                    const Job& job = inst.job(remaining[k]);
                    const Time value =
                        std::max(actual_processing_time(job, now), job.due - now);
                    if (k == 0 || value < best_value) {
                        best = k;
                        best_value = value;
                    }
                }
                const int id = remaining[best];
                expected.push_back(id);
                now += actual_processing_time(inst.job(id), now);
                remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
            }
            CHECK(wmdd(inst).sequence == expected);
        }
    }
    SUBCASE("single job") {
        const Instance one{{Job{1, 2, 1, 5, 9, 1}}};
        CHECK(wmdd(one).sequence == std::vector<int>{1});
    }
}

TEST_CASE("MSWSP") {
    CHECK(mswsp_gamma_grid().size() == 56);
    for (const GammaTriple& g : mswsp_gamma_grid()) {
        CHECK(g.g1_tenths >= 2);
        CHECK(g.g1_tenths <= 9);
        CHECK(g.g2_tenths >= 1);
        CHECK(g.g2_tenths <= 7);
        CHECK(g.g3_tenths == std::max(10 - g.g1_tenths - g.g2_tenths, 1));
    }

    const Instance e2 = two_job_instance();
    const Schedule s = mswsp(e2);
    CHECK(s.sequence == std::vector<int>{1, 2});  // job 1 has the minimal due date
    CHECK(s.objective == 0);

    const Instance one{{Job{1, 2, 1, 5, 9, 1}}};
    CHECK(mswsp(one).sequence == std::vector<int>{1});
}

TEST_CASE("pairwise swap") {
    const Instance e2 = two_job_instance();

    SUBCASE("repairs the bad order") {
        const Schedule bad = evaluate(e2, std::vector<int>{2, 1});
        const Schedule fixed = pairwise_swap(e2, bad);
        CHECK(fixed.sequence == std::vector<int>{1, 2});
        CHECK(fixed.objective == 0);
    }
    SUBCASE("leaves an optimal schedule unchanged") {
        const Schedule good = evaluate(e2, std::vector<int>{1, 2});
        CHECK(pairwise_swap(e2, good).sequence == good.sequence);
    }
    SUBCASE("never worsens the objective") {
        SplitMix64 rng(21);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = static_cast<int>(rng.uniform_int(1, 10));
            const Instance inst = testutil::random_instance(rng, n);
            const Schedule input = evaluate(inst, testutil::random_permutation(rng, n));
            CHECK(pairwise_swap(inst, input, PsMode::single_pass).objective <= input.objective);
            CHECK(pairwise_swap(inst, input, PsMode::to_fixpoint).objective <= input.objective);
        }
    }
    SUBCASE("to-fixpoint output is 2-swap optimal") {
        SplitMix64 rng(23);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = static_cast<int>(rng.uniform_int(2, 8));
            const Instance inst = testutil::random_instance(rng, n);
            const Schedule input = evaluate(inst, testutil::random_permutation(rng, n));
            const Schedule out = pairwise_swap(inst, input, PsMode::to_fixpoint);
            std::vector<int> seq = out.sequence;
            for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                for (std::size_t j = i + 1; j < seq.size(); ++j) {
                    std::swap(seq[i], seq[j]);
                    CHECK(objective_of(inst, seq) >= out.objective);
                    std::swap(seq[i], seq[j]);
                }
            }
        }
    }
    SUBCASE("single pass really is a single sweep") {
        // look for an input where the fixpoint run beats one sweep; its
        // existence shows single_pass stops after n(n-1)/2 exchanges
        SplitMix64 rng(27);
        bool found_gap = false;
        for (int trial = 0; trial < 400 && !found_gap; ++trial) {
            const Instance inst = testutil::random_instance(rng, 6);
            const Schedule input = evaluate(inst, testutil::random_permutation(rng, 6));
            const Schedule once = pairwise_swap(inst, input, PsMode::single_pass);
            const Schedule fix = pairwise_swap(inst, once, PsMode::to_fixpoint);
            if (fix.objective < once.objective) found_gap = true;
        }
        CHECK(found_gap);
    }
}

TEST_CASE("run_with_ps composes dispatch and the swap pass") {
    const Instance e2 = two_job_instance();
    CHECK(run_with_ps(e2, Algorithm::WSPT).objective == 0);  // base WSPT gives 5
    CHECK(run_with_ps(e2, Algorithm::CA).objective == 0);

    const Instance one{{Job{1, 2, 1, 5, 9, 1}}};
    for (Algorithm alg : all_algorithms)
        CHECK(run_with_ps(one, alg).objective == evaluate(one, std::vector<int>{1}).objective);

    CHECK(run_algorithm(e2, parse_algorithm("WSPT")).objective == 5);
    CHECK(run_algorithm(e2, parse_algorithm("WSPT_PS")).objective == 0);

    SUBCASE("config routes the PS mode") {
        SplitMix64 rng(39);
        const Instance inst = testutil::random_instance(rng, 9);
        HeuristicConfig config;
        config.ps_mode = PsMode::to_fixpoint;
        const Schedule via_config = run_with_ps(inst, Algorithm::EDD, config);
        const Schedule direct = pairwise_swap(inst, edd(inst), PsMode::to_fixpoint);
        CHECK(via_config.sequence == direct.sequence);
        CHECK(via_config.objective == direct.objective);
    }
}

TEST_CASE("heuristics stay above the exact optimum") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 7));
        const Instance inst = testutil::random_instance(rng, n);
        const Objective optimum = solve_brute_force(inst).optimum;
        for (Algorithm alg : all_algorithms) {
            const Schedule base = dispatch(inst, alg);
            CHECK(base.objective == objective_of(inst, base.sequence));
            CHECK(base.objective >= optimum);
            CHECK(run_with_ps(inst, alg).objective >= optimum);
        }
    }
}

TEST_CASE("heuristics are deterministic") {
    SplitMix64 rng(37);
    const Instance inst = testutil::random_instance(rng, 12);
    for (Algorithm alg : all_algorithms) {
        const Schedule a = dispatch(inst, alg);
        const Schedule b = dispatch(inst, alg);
        CHECK(a.sequence == b.sequence);
        CHECK(a.objective == b.objective);
    }
}
