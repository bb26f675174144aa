#include "stepsched/mip.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "checked_math.hpp"

namespace stepsched {

namespace {

std::string var_s(int j) { return "s_" + std::to_string(j); }
std::string var_t(int j) { return "T_" + std::to_string(j); }
std::string var_u(int j) { return "u_" + std::to_string(j); }
std::string var_y(int i, int j) { return "y_" + std::to_string(i) + "_" + std::to_string(j); }

}  // namespace

Time big_m(const Instance& instance) {
    Time max_due = 0;
    Time total = 0;
    for (const Job& job : instance.jobs()) {
        max_due = std::max(max_due, job.due);
        total = detail::add_time(total, detail::add_time(job.basic_time, job.penalty));
    }
    return detail::add_time(max_due, total);
}

std::string export_lp(const Instance& instance) {
    const int n = instance.size();
    const Time m = big_m(instance);
    std::ostringstream lp;

    lp << "Minimize\n obj:";
    for (int j = 1; j <= n; ++j) {
        lp << (j == 1 ? " " : " + ") << instance.job(j).weight << ' ' << var_t(j);
    }
    if (n == 0) lp << " 0 T_0";  // degenerate placeholder keeps the file well-formed
    lp << "\nSubject To\n";

    // disjunctive ordering pairs: job i before j when y_i_j = 1, after otherwise
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Job& ji = instance.job(i);
            const Job& jj = instance.job(j);
            // s_i + a_i + b_i u_i <= s_j + M (1 - y_i_j)
            lp << ' ' << "prec_" << i << '_' << j << ": " << var_s(i) << " - " << var_s(j)
               << " + " << ji.penalty << ' ' << var_u(i) << " + " << m << ' ' << var_y(i, j)
               << " <= " << (m - ji.basic_time) << '\n';
            // s_j + a_j + b_j u_j <= s_i + M y_i_j
            lp << ' ' << "prec_" << j << '_' << i << ": " << var_s(j) << " - " << var_s(i)
               << " + " << jj.penalty << ' ' << var_u(j) << " - " << m << ' ' << var_y(i, j)
               << " <= " << -jj.basic_time << '\n';
        }
    }
    for (int j = 1; j <= n; ++j) {
        const Job& job = instance.job(j);
        // s_j + a_j + b_j u_j - d_j <= T_j
        lp << " tard_" << j << ": " << var_s(j) << " + " << job.penalty << ' ' << var_u(j)
           << " - " << var_t(j) << " <= " << (job.due - job.basic_time) << '\n';
        // u_j must switch on once s_j exceeds h_j
        lp << " det_" << j << ": " << var_s(j) << " - " << m << ' ' << var_u(j)
           << " <= " << job.deteriorating_date << '\n';
    }

    lp << "Bounds\n";
    for (int j = 1; j <= n; ++j) {
        lp << ' ' << var_s(j) << " >= 0\n";
        lp << ' ' << var_t(j) << " >= 0\n";
    }

    lp << "Binary\n";
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) lp << ' ' << var_y(i, j) << '\n';
    for (int j = 1; j <= n; ++j) lp << ' ' << var_u(j) << '\n';

    lp << "End\n";
    return lp.str();
}

ModelCheck check_against_model(const Instance& instance, const Schedule& schedule) {
    const int n = instance.size();
    const Time m = big_m(instance);
    ModelCheck result;

    // position of each job in the sequence, for the y assignment
    std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k)
        position[static_cast<std::size_t>(schedule.sequence[static_cast<std::size_t>(k)])] = k;

    auto s_of = [&](int j) { return schedule.start[static_cast<std::size_t>(j) - 1]; };
    auto t_of = [&](int j) { return schedule.tardiness[static_cast<std::size_t>(j) - 1]; };
    auto u_of = [&](int j) {
        return s_of(j) > instance.job(j).deteriorating_date ? Time{1} : Time{0};
    };

    auto fail = [&](const std::string& row) {
        result.passed = false;
        result.first_violation = row;
        return result;
    };

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Time y = position[static_cast<std::size_t>(i)] <
                                   position[static_cast<std::size_t>(j)]
                               ? 1
                               : 0;
            const Job& ji = instance.job(i);
            const Job& jj = instance.job(j);
            if (s_of(i) - s_of(j) + ji.penalty * u_of(i) + m * y > m - ji.basic_time)
                return fail("prec_" + std::to_string(i) + "_" + std::to_string(j));
            if (s_of(j) - s_of(i) + jj.penalty * u_of(j) - m * y > -jj.basic_time)
                return fail("prec_" + std::to_string(j) + "_" + std::to_string(i));
        }
    }
    Objective model_objective = 0;
    for (int j = 1; j <= n; ++j) {
        const Job& job = instance.job(j);
        if (s_of(j) + job.penalty * u_of(j) - t_of(j) > job.due - job.basic_time)
            return fail("tard_" + std::to_string(j));
        if (s_of(j) - m * u_of(j) > job.deteriorating_date)
            return fail("det_" + std::to_string(j));
        if (s_of(j) < 0 || t_of(j) < 0) return fail("bounds_" + std::to_string(j));
        model_objective = detail::add_objective(
            model_objective, detail::mul_objective(job.weight, t_of(j)));
    }
    result.objective = model_objective;
    if (model_objective != schedule.objective) return fail("objective");

    result.passed = true;
    return result;
}

}  // namespace stepsched
