#include "padic/valuation.hpp"

namespace padic {

namespace {

std::int64_t multiplicity(const mpz_class& n, const mpz_class& p) {
    mpz_class stripped;
    return static_cast<std::int64_t>(
        mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

} // namespace

std::optional<std::int64_t> valuation(const Rational& x, const Prime& p) {
    if (x.is_zero()) {
        return std::nullopt;
    }
    const mpz_class base(static_cast<long>(p.value()));
    return multiplicity(x.numerator(), base) - multiplicity(x.denominator(), base);
}

Exponent abs_exp(const Rational& x, const Prime& p) {
    const auto v = valuation(x, p);
    if (!v) {
        return Exponent::neg_infinity();
    }
    return Exponent::from_twice(-2 * *v);
}

} // namespace padic
