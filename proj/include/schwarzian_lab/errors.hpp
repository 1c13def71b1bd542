#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schwarzian_lab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible domain (|alpha| >= pi/2, |b| >= 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class BadParameter : public DomainError {
public:
    using DomainError::DomainError;
};

/// (alpha, z0) satisfies neither admissibility condition of the extremal construction.
class ConditionViolation : public DomainError {
public:
    using DomainError::DomainError;
};

class OutsideDisk : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroPoint : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroConstantTerm : public Error {
public:
    using Error::Error;
};

class NonvanishingInner : public Error {
public:
    using Error::Error;
};

class VanishingDerivative : public Error {
public:
    using Error::Error;
};

class EvaluationFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace schwarzian_lab
