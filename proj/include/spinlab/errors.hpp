#pragma once

#include <stdexcept>
#include <string>

namespace spinlab {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two elements with different algebra signatures were combined.
struct SignatureMismatch : Error {
    using Error::Error;
};

/// Two paravectors with different observer frames were combined.
struct FrameMismatch : Error {
    using Error::Error;
};

/// The element lies on (or within tolerance of) the null cone and has no inverse.
struct NullElement : Error {
    using Error::Error;
};

/// The quadratic form is nonpositive where a norm evaluation requires it positive.
struct OutsideNormDomain : Error {
    using Error::Error;
};

/// An integration path left the region where the quadratic form stays above its floor.
struct PathCrossesNullCone : Error {
    using Error::Error;
};

/// The constraint system admits no candidate within the configured threshold.
struct EmptySolution : Error {
    using Error::Error;
};

/// Rejection sampling could not produce elements satisfying the quadratic-form floor.
struct SamplingFailure : Error {
    using Error::Error;
};

/// Command-line level misuse (unknown suite name, invalid option value).
struct UsageError : Error {
    using Error::Error;
};

}  // namespace spinlab
