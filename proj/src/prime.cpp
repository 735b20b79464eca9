#include "padic/prime.hpp"

#include <string>

namespace padic {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

Prime::Prime(std::int64_t p) : p_(p) {
    if (p < 2 || p > max_value) {
        throw error("prime " + std::to_string(p) + " outside supported range [2, " +
                    std::to_string(max_value) + "]");
    }
    if (!is_prime(p)) {
        throw error(std::to_string(p) + " is not prime");
    }
}

Rational Prime::pow_rational(std::int64_t k) const {
    mpz_class pw;
    const unsigned long mag = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p_), mag);
    if (k < 0) {
        return Rational(mpz_class(1), std::move(pw));
    }
    return Rational(std::move(pw));
}

} // namespace padic
