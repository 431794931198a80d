#pragma once

#include <stdexcept>
#include <string>

namespace shapeassoc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Series shorter than two samples.
class LengthError : public Error {
public:
    using Error::Error;
};

/// Series of mismatched length, ragged input rows.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Non-finite or unparseable value.
class ValueError : public Error {
public:
    using Error::Error;
};

/// Invalid estimate, standardization, measure or clustering parameters.
class SpecError : public Error {
public:
    using Error::Error;
};

/// An operation that needs a non-constant series received a constant one.
class ConstantSeriesError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a transform.
class DomainError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace shapeassoc
