#pragma once

#include <stdexcept>
#include <string>

namespace khoworks {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntactically broken PD / annulus input.
struct MalformedInput : Error {
    using Error::Error;
};

// An arc label is used a number of times != 2.
struct ArcDegreeError : MalformedInput {
    using MalformedInput::MalformedInput;
};

// A named arc does not exist in the diagram.
struct UnknownArc : Error {
    using Error::Error;
};

// Bad argument to a diagram-family constructor or similar.
struct InvalidParameter : Error {
    using Error::Error;
};

// Crossing count / state count exceeds the configured budget.
struct SizeLimit : Error {
    using Error::Error;
};

// The PD code is not realizable in the plane / annulus: resmoothing a
// crossing failed to merge or split circles as an embedded curve must.
struct NotPlanar : Error {
    using Error::Error;
};

// Bracket of the empty link is requested in normalized form.
struct EmptyDiagram : Error {
    using Error::Error;
};

// Grading parities are inconsistent with the requested conversion.
struct ParityError : Error {
    using Error::Error;
};

// Two expressions that a theorem requires to be equal disagree
// (e.g. the Traczyk signature formulas on a non-alternating input).
struct FormulaMismatch : Error {
    using Error::Error;
};

// A KBSM element failed to expand in the basis (a+a^-1)^m.
struct NonExpandable : Error {
    using Error::Error;
};

// Integer overflow detected in machine-word linear algebra; callers
// retry with arbitrary precision.
struct Overflow : Error {
    using Error::Error;
};

}  // namespace khoworks
