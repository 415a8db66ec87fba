#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

// Numerical failures (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series truncation could not certify the requested tolerance before j_max_cap.
struct TruncationFailure : NumericalError {
    using NumericalError::NumericalError;
};

// M violates the grid invariant against the polynomial degree.
struct GridTooCoarse : NumericalError {
    using NumericalError::NumericalError;
};

// Small-h shell tail still above tolerance at the shell cap.
struct ShellTailNotConverged : NumericalError {
    using NumericalError::NumericalError;
};

// Interpolation integral tail failed to close geometrically; cannot occur
// for finitely supported input.
struct TailNotGeometric : NumericalError {
    using NumericalError::NumericalError;
};

// Lambda-regime preconditions of the Triebel-Lizorkin checks violated.
struct RegimeViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Decomposition search is only feasible on small supports.
struct SupportTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad CLI usage / malformed spec strings (CLI exit code 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace fraclab
