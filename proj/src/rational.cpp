#include "padic/rational.hpp"

#include <cctype>

namespace padic {

Rational::Rational(mpz_class n, mpz_class d) {
    if (sgn(d) == 0) {
        throw arithmetic_error("rational with zero denominator");
    }
    q_ = mpq_class(std::move(n), std::move(d));
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw arithmetic_error("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational Rational::from_string(const std::string& text) {
    std::string num = text;
    std::string den = "1";
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string digits = num;
    if (!digits.empty() && digits.front() == '-') {
        digits.erase(digits.begin());
    }
    if (!all_digits(digits) || !all_digits(den)) {
        throw parse_error("malformed rational '" + text + "'");
    }
    mpz_class d(den);
    if (sgn(d) == 0) {
        throw parse_error("rational '" + text + "' has zero denominator");
    }
    return Rational(mpz_class(num), std::move(d));
}

} // namespace padic
