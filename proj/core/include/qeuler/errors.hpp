#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (polynomials, presentation files). Carries a
// zero-based character offset into the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Structurally invalid input: bad parameters, mismatched variable sets,
// non-associative tables, degenerate forms, infinite-dimensional quotients.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A verified mathematical invariant failed to hold for the computed data.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace qeuler
