#pragma once

#include <optional>

#include "padic/exponent.hpp"
#include "padic/prime.hpp"
#include "padic/rational.hpp"

namespace padic {

/// p-adic valuation v_p(x) = v_p(num) - v_p(den). Zero has infinite
/// valuation, signalled by an empty optional.
std::optional<std::int64_t> valuation(const Rational& x, const Prime& p);

/// p-adic absolute value |x| = p^(-v_p(x)) as an exponent; |0| is the
/// negative-infinity exponent.
Exponent abs_exp(const Rational& x, const Prime& p);

} // namespace padic
