#pragma once

#include <stdexcept>
#include <string>

namespace e6cs {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A weight vector that is not in the root lattice.
class NonIntegral : public Error {
public:
    using Error::Error;
};

/// Root or table data failed a self-consistency check.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Method 1 hit two equal eigenvalues.
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

/// Method 2 produced a zero leading coefficient.
class DegenerateScale : public Error {
public:
    using Error::Error;
};

/// A cache file is unreadable or fails validation.
class CacheCorrupt : public Error {
public:
    using Error::Error;
};

class NegativeMultiplicity : public Error {
public:
    using Error::Error;
};

class NonzeroResidual : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (weights, rationals, polynomial expressions, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace e6cs
