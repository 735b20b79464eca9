#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "padic/errors.hpp"
#include "padic/prime.hpp"

namespace padic {

/// Magnitude of a p-adic quantity, represented as the exponent e of p^e
/// with e a half-integer, or negative infinity for the magnitude of zero.
/// Twice the exponent is stored so half-integers stay exact. All norm and
/// absolute-value comparisons in the library are comparisons of these
/// exponents; no magnitude is ever materialized as a floating-point value.
class Exponent {
public:
    /// Magnitude of zero: compares strictly below every finite exponent.
    static Exponent neg_infinity() { return Exponent(); }

    /// Finite magnitude p^(twice/2).
    static Exponent from_twice(std::int64_t twice) { return Exponent(twice); }

    /// Finite magnitude p^e for integer e.
    static Exponent from_int(std::int64_t e) { return Exponent(2 * e); }

    bool is_finite() const { return finite_; }

    /// Twice the exponent. Only meaningful for finite values.
    std::int64_t twice() const;

    /// Magnitude product: exponents add; zero absorbs.
    friend Exponent operator+(const Exponent& a, const Exponent& b);

    /// Magnitude quotient by a nonzero magnitude: exponents subtract.
    /// The divisor must be finite (division by zero magnitude).
    friend Exponent operator-(const Exponent& a, const Exponent& b);

    /// Magnitude square root: halves the exponent. Requires an even
    /// twice-value (an integer exponent), so the result stays in the
    /// half-integer grid.
    Exponent half() const;

    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.twice_ == b.twice_);
    }
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

    /// Renders the magnitude for a given base, e.g. "5^3", "2^(-1/2)",
    /// "1" for exponent zero and "0" for negative infinity.
    std::string display(const Prime& p) const;

private:
    Exponent() : twice_(0), finite_(false) {}
    explicit Exponent(std::int64_t twice) : twice_(twice), finite_(true) {}

    std::int64_t twice_;
    bool finite_;
};

inline Exponent max(const Exponent& a, const Exponent& b) { return b < a ? a : b; }

} // namespace padic
