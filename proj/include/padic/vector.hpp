#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "padic/exponent.hpp"
#include "padic/prime.hpp"
#include "padic/rational.hpp"
#include "padic/valuation.hpp"

namespace padic {

/// Norms are magnitudes p^e, carried as exponents like every other
/// magnitude in the library.
using NormValue = Exponent;

/// Vector in one of the two spaces: K^d for a finite dimension d, or the
/// finitely supported sequence space when the dimension marker is empty
/// (the "c0" case). Coordinates are stored sparsely as (index, value)
/// pairs with strictly increasing indices and no zero values.
class PVector {
public:
    using Coord = std::pair<std::uint32_t, Rational>;

    /// Canonicalizes: sorts by index, rejects duplicates, prunes zeros,
    /// and bounds-checks indices against a finite dimension.
    PVector(Prime p, std::optional<std::uint32_t> dim, std::vector<Coord> coords);

    static PVector zero(Prime p, std::optional<std::uint32_t> dim) {
        return PVector(std::move(p), dim, {});
    }
    static PVector basis(Prime p, std::optional<std::uint32_t> dim, std::uint32_t index) {
        return PVector(std::move(p), dim, {{index, Rational(1)}});
    }

    const Prime& prime() const { return p_; }
    /// Empty for the finitely supported sequence space.
    std::optional<std::uint32_t> dim() const { return dim_; }
    bool is_c0() const { return !dim_.has_value(); }
    const std::vector<Coord>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    Rational at(std::uint32_t index) const;

    /// Max-norm: the largest coordinate magnitude; zero for the zero vector.
    NormValue norm() const;

    friend bool operator==(const PVector& a, const PVector& b);

private:
    Prime p_;
    std::optional<std::uint32_t> dim_;
    std::vector<Coord> coords_;
};

/// Throws mismatch_error unless both vectors live in the same space.
void require_same_space(const PVector& a, const PVector& b);

PVector add(const PVector& a, const PVector& b);
PVector sub(const PVector& a, const PVector& b);
PVector negate(const PVector& a);
PVector scale(const Rational& c, const PVector& a);

/// Bilinear symmetric form: the sum of coordinatewise products over the
/// intersection of supports.
Rational inner(const PVector& a, const PVector& b);

} // namespace padic
