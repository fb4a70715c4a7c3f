#pragma once

#include <stdexcept>
#include <string>

namespace framemult {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible vector/matrix dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// Matrix expected to be Hermitian is not, beyond tolerance.
struct NotHermitianError : Error {
    using Error::Error;
};

/// Linear solve requested on a (numerically) singular matrix.
struct SingularMatrixError : Error {
    SingularMatrixError(const std::string& msg, double condition_estimate)
        : Error(msg), condition(condition_estimate) {}
    double condition;
};

/// Sequence does not span the ambient space.
struct NotAFrameError : Error {
    using Error::Error;
};

/// Sequence is not a Riesz basis (N != d or not spanning).
struct NotRieszError : Error {
    using Error::Error;
};

/// Symbol has entries too close to zero relative to its sup norm.
struct NotSemiNormalizedError : Error {
    using Error::Error;
};

/// Operator is singular within tolerance.
struct NotInvertibleError : Error {
    using Error::Error;
};

/// Supplied sequence fails the dual-pair test.
struct NotADualError : Error {
    using Error::Error;
};

/// None of the symbol-factorization hypotheses hold.
struct NoFactorizationStrategyError : Error {
    using Error::Error;
};

/// Symbol is not a constant sequence.
struct NonConstantSymbolError : Error {
    using Error::Error;
};

/// Constant symbol is zero.
struct ZeroSymbolError : Error {
    using Error::Error;
};

/// Operator does not commute with the time-frequency shifts of the lattice.
struct DoesNotCommuteError : Error {
    using Error::Error;
};

/// Malformed input (JSON schema violations, bad CLI arguments).
struct InputError : Error {
    using Error::Error;
};

}  // namespace framemult
