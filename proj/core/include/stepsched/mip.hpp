#pragma once

#include <string>

#include "stepsched/schedule.hpp"
#include "stepsched/types.hpp"

namespace stepsched {

/// Big-M constant: max_j d_j + sum_j (a_j + b_j).
Time big_m(const Instance& instance);

/// CPLEX-LP text of the weighted-tardiness model with the step function
/// linearized through per-job deterioration binaries u_j:
///   minimize  sum w_j T_j
///   prec_i_j: s_i + a_i + b_i u_i <= s_j + M (1 - y_i_j)   for i < j
///   prec_j_i: s_j + a_j + b_j u_j <= s_i + M y_i_j          for i < j
///   tard_j:   s_j + a_j + b_j u_j - d_j <= T_j
///   det_j:    s_j - M u_j <= h_j       (forces u_j = 1 once s_j > h_j)
///   y_i_j, u_j binary; s_j, T_j >= 0.
/// Variable names are y_i_j, u_j, s_j, T_j; coefficients are exact integers.
std::string export_lp(const Instance& instance);

struct ModelCheck {
    bool passed = false;
    std::string first_violation;  // row name; empty when passed
    Objective objective = 0;      // model objective of the assignment
};

/// Builds the assignment implied by the schedule (y from the sequence order,
/// u_j = [s_j > h_j], s and T taken verbatim) and verifies every exported
/// row plus agreement of the model objective with schedule.objective.
ModelCheck check_against_model(const Instance& instance, const Schedule& schedule);

}  // namespace stepsched
