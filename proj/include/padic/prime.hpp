#pragma once

#include <cstdint>

#include "padic/rational.hpp"

namespace padic {

/// A validated prime, the base of the valuation. Construction runs a
/// deterministic trial-division primality check; the supported range is
/// 2..1000000, which keeps the check exact and instant.
class Prime {
public:
    static constexpr std::int64_t max_value = 1'000'000;

    explicit Prime(std::int64_t p);

    std::int64_t value() const { return p_; }

    /// p^k as an exact rational; k may be negative.
    Rational pow_rational(std::int64_t k) const;

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

private:
    std::int64_t p_;
};

} // namespace padic
