#pragma once

#include <stdexcept>
#include <string>

namespace gf2lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in ambient spaces of different dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The requested computation exceeds a documented size cap.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// Malformed argument (zero character, bad rational, 0 in a simple set, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A vector was expected to lie in a subspace and does not.
class ContainmentError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (.gf2set files, subspace files, bit strings).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A checked statement failed on a concrete instance. Carries a dump of the
/// instance so it can be preserved for inspection.
class CounterexampleError : public Error {
public:
    CounterexampleError(const std::string& what, std::string dump)
        : Error(what), dump_(std::move(dump)) {}

    const std::string& dump() const noexcept { return dump_; }

private:
    std::string dump_;
};

} // namespace gf2lab
