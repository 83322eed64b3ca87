#pragma once

#include <stdexcept>
#include <string>

namespace bars {

// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Interval evaluation could not decide a sign at the declared symbol precision.
class IndeterminateSign : public Error {
public:
    using Error::Error;
};

// Two values built over different symbol spaces were combined.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DependentInput : public Error {
public:
    using Error::Error;
};

// The positive basis search ran out of refinement rounds.
class RefinementExhausted : public Error {
public:
    using Error::Error;
};

class SegmentSumMismatch : public Error {
public:
    using Error::Error;
};

class GridTooLarge : public Error {
public:
    using Error::Error;
};

class InvalidDissection : public Error {
public:
    using Error::Error;
};

class DimensionUnsupported : public Error {
public:
    using Error::Error;
};

} // namespace bars
