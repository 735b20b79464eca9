#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include "padic/errors.hpp"
#include "padic/exponent.hpp"
#include "padic/prime.hpp"
#include "padic/rational.hpp"
#include "padic/rng.hpp"
#include "padic/sampling.hpp"
#include "padic/valuation.hpp"

using namespace padic;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(9, 25) + Rational(16, 25) == Rational(1));
    CHECK(Rational(3, 5) * Rational(4, 5) == Rational(12, 25));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), arithmetic_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), arithmetic_error);
}

TEST_CASE("rational string round trip") {
    CHECK(Rational(-3, 5).to_string() == "-3/5");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational::from_string("-48/125") == Rational(-48, 125));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK_THROWS_AS(Rational::from_string("1/0"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("+3"), parse_error);
    CHECK_THROWS_AS(Rational::from_string("a/b"), parse_error);
    CHECK_THROWS_AS(Rational::from_string(""), parse_error);
}

TEST_CASE("prime construction is validated") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(97).value() == 97);
    CHECK(Prime(999983).value() == 999983);
    CHECK_THROWS_AS(Prime(1), error);
    CHECK_THROWS_AS(Prime(4), error);
    CHECK_THROWS_AS(Prime(999981), error); // divisible by 3
    CHECK_THROWS_AS(Prime(1000003), error); // above the supported bound
    CHECK(Prime(3).pow_rational(-2) == Rational(1, 9));
    CHECK(Prime(3).pow_rational(4) == Rational(81));
    CHECK(Prime(3).pow_rational(0) == Rational(1));
}

TEST_CASE("valuation of rationals") {
    CHECK(!valuation(Rational(0), Prime(5)).has_value());
    CHECK(valuation(Rational(1), Prime(7)) == 0);
    CHECK(valuation(Rational(-48, 125), Prime(5)) == -3);
    CHECK(valuation(Rational(9), Prime(3)) == 2);
    CHECK(valuation(Rational(1, 2), Prime(2)) == -1);
}

TEST_CASE("absolute value as exponent") {
    CHECK(abs_exp(Rational(0), Prime(3)) == Exponent::neg_infinity());
    CHECK(abs_exp(Rational(1, 2), Prime(2)) == Exponent::from_int(1));
    CHECK(abs_exp(Rational(9), Prime(3)) == Exponent::from_int(-2));
    CHECK(abs_exp(Rational(2), Prime(2)) == Exponent::from_int(-1));
    CHECK(abs_exp(Rational(2), Prime(7)) == Exponent::from_int(0));
}

TEST_CASE("exponent algebra") {
    const Exponent inf = Exponent::neg_infinity();
    CHECK(Exponent::from_int(1) + Exponent::from_int(-2) == Exponent::from_int(-1));
    CHECK(inf + Exponent::from_int(5) == inf);
    CHECK(Exponent::from_int(3).half() == Exponent::from_twice(3));
    CHECK(inf.half() == inf);
    CHECK_THROWS_AS(Exponent::from_twice(3).half(), arithmetic_error);
    CHECK(Exponent::from_int(2) - Exponent::from_twice(-1) == Exponent::from_twice(5));
    CHECK(inf - Exponent::from_int(1) == inf);
    CHECK_THROWS_AS(Exponent::from_int(0) - inf, arithmetic_error);

    CHECK(inf < Exponent::from_int(-100));
    CHECK(Exponent::from_twice(3) < Exponent::from_int(2));
    CHECK(max(inf, Exponent::from_int(-1)) == Exponent::from_int(-1));
    CHECK(max(Exponent::from_int(2), Exponent::from_int(5)) == Exponent::from_int(5));
}

TEST_CASE("exponent display") {
    const Prime p(5);
    CHECK(Exponent::from_int(3).display(p) == "5^3");
    CHECK(Exponent::from_twice(-1).display(p) == "5^(-1/2)");
    CHECK(Exponent::from_int(0).display(p) == "1");
    CHECK(Exponent::neg_infinity().display(p) == "0");
}

namespace {

bool lowest_terms(const Rational& x) {
    const mpz_class g = gcd(x.numerator(), x.denominator());
    return g == 1 && x.denominator() > 0;
}

} // namespace

TEST_CASE("multiplicativity and ultrametric over random pairs") {
    for (const long pv : {2L, 3L, 5L, 7L, 97L}) {
        const Prime p(pv);
        SplitRng rng(0xfeedULL + static_cast<std::uint64_t>(pv));
        for (int i = 0; i < 4000; ++i) {
            const Rational x = random_rational_mixed(rng, 30, p);
            const Rational y = random_rational_mixed(rng, 30, p);

            CHECK(abs_exp(x * y, p) == abs_exp(x, p) + abs_exp(y, p));

            const Exponent ax = abs_exp(x, p);
            const Exponent ay = abs_exp(y, p);
            const Exponent axy = abs_exp(x + y, p);
            CHECK(axy <= max(ax, ay));
            if (ax != ay) {
                CHECK(axy == max(ax, ay));
            }

            CHECK(lowest_terms(x + y));
            CHECK(lowest_terms(x - y));
            CHECK(lowest_terms(x * y));
            if (!y.is_zero()) {
                CHECK(lowest_terms(x / y));
            }
            CHECK((valuation(x, p).has_value() == !x.is_zero()));
            CHECK(x - x == Rational(0));
        }
    }
}
