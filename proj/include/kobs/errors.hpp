#pragma once

#include <stdexcept>
#include <string>

namespace kobs {

/// Bad parameter combination or out-of-contract argument.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested region does not fit inside the grid.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Precondition on the data (not the parameters) failed.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative solver gave up.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, long step, double residual)
        : std::runtime_error(what), step_(step), residual_(residual) {}
    long step() const noexcept { return step_; }
    double residual() const noexcept { return residual_; }

private:
    long step_;
    double residual_;
};

/// Malformed or truncated field file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kobs
