#pragma once

#include <stdexcept>

namespace stepsched {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInstance : Error { using Error::Error; };
struct InvalidPermutation : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct SpecViolation : Error { using Error::Error; };
struct UnknownAlgorithm : Error { using Error::Error; };
struct ContractViolation : Error { using Error::Error; };
struct DivisionUndefined : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace stepsched
