#pragma once

#include <cstdint>
#include <vector>

#include "padic/rng.hpp"
#include "padic/vector.hpp"

namespace padic {

/// Random rational with numerator in [-bound, bound] and denominator in
/// [1, bound].
Rational random_rational(SplitRng& rng, int bound);

/// Same, then multiplied by p^k with k uniform in [-2, 2] so valuations
/// spread; plain small rationals rarely produce interesting magnitudes.
Rational random_rational_mixed(SplitRng& rng, int bound, const Prime& p);

/// Rational point on the unit quadric sum_j x_j^2 = 1 from the
/// stereographic parametrization: given u in Q^(d-1), with s = sum u_k^2,
/// returns (x_1, ..., x_d) = ((1-s)/(1+s), 2u_1/(1+s), ..., 2u_{d-1}/(1+s)).
/// Over the rationals 1+s > 0, so the map is total; u = 0 gives e_1.
std::vector<Rational> unit_quadric_point(const std::vector<Rational>& u);

/// Vector x in K^d with inner(x, x) = 1 exactly. Requires d >= 2.
PVector sample_normalized(const Prime& p, std::uint32_t d, SplitRng& rng, int size_bound);

/// Finitely supported sequence x with inner(x, x) = 1 exactly: a quadric
/// point placed on `support_size` distinct indices drawn from [0, window).
PVector sample_normalized_c0(const Prime& p, std::uint32_t support_size, std::uint32_t window,
                             SplitRng& rng, int size_bound);

/// Witness for the orthogonality-constrained inequalities: draws a random
/// z, removes its component along x (exact, by bilinearity and symmetry),
/// then scales by a power of p so the norm exponent is at most zero.
/// Requires inner(x, x) = 1. The result satisfies inner(x, y) = 0 and
/// norm(y) <= 1 exactly; it is the zero vector when z happens to be a
/// multiple of x.
PVector orthogonal_witness(const PVector& x, SplitRng& rng, int size_bound);

} // namespace padic
