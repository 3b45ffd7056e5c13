#pragma once

#include <stdexcept>

namespace sectoria {

// Input matrix failed the hermiticity gate of an eigensolver entry point.
struct NonHermitianInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A pivot fell below the relative tolerance during LU elimination.
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires a strictly positive opening half-angle.
struct DegenerateAngle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A constructed object failed its own numerical certificate.
struct CertificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sectoria
