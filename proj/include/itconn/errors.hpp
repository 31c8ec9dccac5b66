#pragma once

#include <stdexcept>
#include <string>

namespace itconn {

// Bad or malformed user input (maps to CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A required value does not exist: non-invertible element, missing p-th
// root, inconsistent system, and so on (CLI exit code 1 when it is the
// mathematical verdict of a run).
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : MathError {
    using MathError::MathError;
};
struct NotPthPower : MathError {
    using MathError::MathError;
};
struct Inconsistent : MathError {
    using MathError::MathError;
};
struct RankDefect : MathError {
    using MathError::MathError;
};
struct NotDescendable : MathError {
    using MathError::MathError;
};

}  // namespace itconn

namespace itconn {

// Two graded objects with different descriptors were combined.
struct DescriptorMismatch : InputError {
    using InputError::InputError;
};

}  // namespace itconn

namespace itconn {

// The defining polynomial of an extension has a derivative that is not a
// unit, so Newton lifting is unavailable.
struct NotEtale : MathError {
    using MathError::MathError;
};

}  // namespace itconn

namespace itconn {

struct ZeroInput : InputError {
    using InputError::InputError;
};

}  // namespace itconn

namespace itconn {

// A lattice chain whose consecutive transition matrices leave GL_n(F^{p^l}).
struct InvariantViolation : InputError {
    using InputError::InputError;
};

}  // namespace itconn

namespace itconn {

// An equation coefficient has a pole at t = 0, where series solutions are sought.
struct PoleAtOrigin : InputError {
    using InputError::InputError;
};

}  // namespace itconn
