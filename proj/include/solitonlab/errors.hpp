#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solitonlab {

/// Malformed or unsupported input to an operation (unknown symbol, bad case name, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax error in a polynomial expression; `position` is the byte offset of the offending token.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& message, std::size_t position)
        : InvalidInput(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A numeric routine left its domain of validity (r <= 0, point outside a chart, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Surface chart with |X_s x X_t| below the degeneracy threshold.
class SingularChart : public std::runtime_error {
public:
    SingularChart(const std::string& message, double s, double t)
        : std::runtime_error(message), s_(s), t_(t) {}

    double s() const noexcept { return s_; }
    double t() const noexcept { return t_; }

private:
    double s_;
    double t_;
};

/// Integrator failure (step-size underflow, step budget exhausted, tolerance not met).
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace solitonlab
