// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gh {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial expression. Carries the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

class UnknownVariableError : public Error {
public:
    using Error::Error;
};

/// Rational literal whose denominator vanishes in a prime field.
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class RingMismatchError : public Error {
public:
    using Error::Error;
};

class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

class DuplicateVariableError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class NonProperIdealError : public Error {
public:
    using Error::Error;
};

/// Bad CLI/sweep configuration or malformed session input.
class ConfigError : public Error {
public:
    using Error::Error;
};

class SessionError : public Error {
public:
    using Error::Error;
};

/// Generic invalid input that is not a hypothesis of a theorem check.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A configurable cap (pair count, basis size, total degree, exponent range,
/// variable count) was exceeded. Computations fail gracefully instead of
/// running away.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// A verifiable hypothesis of a theorem check failed.
class HypothesisViolatedError : public Error {
public:
    using Error::Error;
};

/// An element required to lie in the irrelevant maximal ideal has a unit entry.
class XNotInMNError : public HypothesisViolatedError {
public:
    using HypothesisViolatedError::HypothesisViolatedError;
};

/// A supplied prime witness does not contain the ideal it must contain.
class WitnessNotContainingError : public HypothesisViolatedError {
public:
    using HypothesisViolatedError::HypothesisViolatedError;
};

} // namespace gh
