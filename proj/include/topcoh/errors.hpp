#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topcoh {

// Error taxonomy shared by the library and the CLI. kind() is the stable
// machine-readable tag that ends up in JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& message)
        : Error("ring-mismatch", message) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& message)
        : Error("invalid-argument", message) {}
};

// Operation is only defined for data this build does not handle
// (e.g. non-homogeneous input to a graded-only computation).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& message)
        : Error("unsupported", message) {}
};

// The requested quantity does not exist for this input (e.g. the top local
// cohomology module vanishes, so it has no attached primes to report).
class HypothesisNotMetError : public Error {
public:
    explicit HypothesisNotMetError(const std::string& message)
        : Error("hypothesis-not-met", message) {}
};

// Two independent computations of the same object disagreed. This is never
// a property of the input; it indicates a defect in the engine itself.
class TheoremViolationError : public Error {
public:
    explicit TheoremViolationError(const std::string& message)
        : Error("theorem-violation", message) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse-error", message), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace topcoh
