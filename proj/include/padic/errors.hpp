#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic that has no defined result (division by zero, halving an
/// odd twice-exponent, subtracting a zero magnitude).
struct arithmetic_error : error {
    explicit arithmetic_error(const std::string& what) : error(what) {}
};

/// Operands live in different spaces (prime or dimension mismatch).
struct mismatch_error : error {
    explicit mismatch_error(const std::string& what) : error(what) {}
};

/// A checker was invoked on an instance violating its stated hypotheses.
/// Distinct from a failed verdict: a failed verdict is a mathematical
/// violation on a well-formed instance.
struct hypothesis_error : error {
    explicit hypothesis_error(const std::string& what) : error(what) {}
};

/// Malformed textual or JSON input.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace padic
