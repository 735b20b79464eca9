#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "padic/errors.hpp"

namespace padic {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is canonically 0/1. Backed by GMP, so numerators and
/// denominators are arbitrary-precision integers.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    Rational(mpz_class n, mpz_class d);
    explicit Rational(mpz_class n) : q_(std::move(n)) {}

    /// Parses "num" or "num/den" with an optional leading '-' on the
    /// numerator only. Throws parse_error on anything else.
    static Rational from_string(const std::string& text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Canonical rendering: "num" when the denominator is 1, else "num/den".
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c <=> 0;
    }

private:
    mpq_class q_;
};

inline Rational square(const Rational& x) { return x * x; }

} // namespace padic
