#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "padic/prime.hpp"
#include "padic/rational.hpp"
#include "padic/vector.hpp"

namespace padic {

/// Decidable description of an operator's domain.
struct DomainDescriptor {
    enum class Kind { all_of_kd, finitely_supported };

    Kind kind;
    Prime p;
    std::uint32_t d; // meaningful for all_of_kd only

    bool contains(const PVector& x) const;
};

/// Linear operator on one of the two spaces. On K^d it is a dense d-by-d
/// rational matrix. On the finitely supported sequence space it is a
/// diagonal map: finitely many explicit entries plus a default rule
/// a_n = coeff * p^(slope * n), which models possibly unbounded operators
/// (negative slope makes |a_n| grow without bound); the domain is exactly
/// the finitely supported vectors. Whether the operator equals its adjoint
/// is determined at construction: a dense matrix iff it is symmetric, a
/// diagonal map always.
class POperator {
public:
    struct Dense {
        std::uint32_t d;
        std::vector<Rational> a; // row-major, d*d entries

        const Rational& at(std::uint32_t i, std::uint32_t j) const { return a[i * d + j]; }
        Rational& at(std::uint32_t i, std::uint32_t j) { return a[i * d + j]; }
    };

    struct Diagonal {
        std::map<std::uint32_t, Rational> entries;
        Rational rule_coeff; // zero means: default entries are zero
        std::int64_t rule_slope;
    };

    static POperator dense(Prime p, std::uint32_t d, std::vector<Rational> row_major);
    static POperator diagonal(Prime p, std::map<std::uint32_t, Rational> entries,
                              Rational rule_coeff = Rational(0), std::int64_t rule_slope = 0);
    static POperator identity(Prime p, std::uint32_t d);
    static POperator identity_c0(Prime p);

    const Prime& prime() const { return p_; }
    bool is_dense() const { return std::holds_alternative<Dense>(body_); }
    const Dense& as_dense() const { return std::get<Dense>(body_); }
    const Diagonal& as_diagonal() const { return std::get<Diagonal>(body_); }

    /// Diagonal entry at index n (explicit entry or rule value).
    Rational diagonal_entry(std::uint32_t n) const;

    bool is_selfadjoint() const { return selfadjoint_; }
    DomainDescriptor domain() const;

    PVector apply(const PVector& x) const;

    friend bool operator==(const POperator& a, const POperator& b);

private:
    POperator(Prime p, Dense d);
    POperator(Prime p, Diagonal d);

    Prime p_;
    std::variant<Dense, Diagonal> body_;
    bool selfadjoint_;
};

/// Throws mismatch_error unless both operators act on the same space.
void require_same_space(const POperator& a, const POperator& b);

/// The unique operator with inner(a.apply(x), y) = inner(x, adjoint(a).apply(y)):
/// the transpose for dense matrices, the operator itself for diagonal maps.
POperator adjoint(const POperator& a);

/// Composition a∘b, materialized as an exact matrix or pointwise product.
POperator compose(const POperator& a, const POperator& b);

/// Sum and difference. For diagonal operators the default rules must be
/// combinable (equal slopes, or one side without a rule); compositions of
/// equal-space diagonals always are, so commutators and anticommutators
/// never hit this restriction.
POperator op_add(const POperator& a, const POperator& b);
POperator op_sub(const POperator& a, const POperator& b);
POperator op_neg(const POperator& a);
POperator op_scale(const Rational& c, const POperator& a);

POperator commutator(const POperator& a, const POperator& b);
POperator anticommutator(const POperator& a, const POperator& b);

} // namespace padic
