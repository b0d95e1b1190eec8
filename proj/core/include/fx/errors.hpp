#pragma once

#include <stdexcept>
#include <string>

namespace fx {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested representation violates the word budget (negative bit
/// counts or int_bits + frac_bits > kMaxMagnitudeBits).
class SpecOutOfRange : public Error {
public:
    using Error::Error;
};

/// NaN or infinity fed to a conversion that needs a finite value.
class NonFiniteInput : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SizeNotPowerOfFour : public Error {
public:
    using Error::Error;
};

class InsufficientBits : public Error {
public:
    using Error::Error;
};

} // namespace fx
