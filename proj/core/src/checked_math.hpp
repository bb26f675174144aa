#pragma once

#include "stepsched/errors.hpp"
#include "stepsched/types.hpp"

namespace stepsched::detail {

inline Time add_time(Time a, Time b) {
    Time r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("time arithmetic overflows 64-bit range");
    return r;
}

inline Objective add_objective(Objective a, Objective b) {
    Objective r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("objective overflows 64-bit range");
    return r;
}

inline Objective mul_objective(Objective a, Objective b) {
    Objective r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("objective overflows 64-bit range");
    return r;
}

}  // namespace stepsched::detail
