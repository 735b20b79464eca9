#include "padic/exponent.hpp"

namespace padic {

std::int64_t Exponent::twice() const {
    if (!finite_) {
        throw arithmetic_error("twice() on a zero magnitude");
    }
    return twice_;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    if (!a.finite_ || !b.finite_) {
        return Exponent::neg_infinity();
    }
    return Exponent::from_twice(a.twice_ + b.twice_);
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    if (!b.finite_) {
        throw arithmetic_error("division by zero magnitude");
    }
    if (!a.finite_) {
        return Exponent::neg_infinity();
    }
    return Exponent::from_twice(a.twice_ - b.twice_);
}

Exponent Exponent::half() const {
    if (!finite_) {
        return neg_infinity();
    }
    if (twice_ % 2 != 0) {
        throw arithmetic_error("halving a non-integer exponent leaves the half-integer grid");
    }
    return from_twice(twice_ / 2);
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.finite_ != b.finite_) {
        return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (!a.finite_) {
        return std::strong_ordering::equal;
    }
    return a.twice_ <=> b.twice_;
}

std::string Exponent::display(const Prime& p) const {
    if (!finite_) return "0";
    if (twice_ == 0) return "1";
    const std::string base = std::to_string(p.value());
    if (twice_ % 2 == 0) {
        return base + "^" + std::to_string(twice_ / 2);
    }
    return base + "^(" + std::to_string(twice_) + "/2)";
}

} // namespace padic
