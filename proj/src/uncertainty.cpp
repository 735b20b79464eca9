#include "padic/uncertainty.hpp"

#include <array>

#include "padic/errors.hpp"
#include "padic/valuation.hpp"

namespace padic {

namespace {

constexpr std::array<std::pair<CheckId, const char*>, 11> check_names{{
    {CheckId::hrs_i, "HRS_i"},
    {CheckId::hrs_ii, "HRS_ii"},
    {CheckId::hrs_iii, "HRS_iii"},
    {CheckId::hrs_iv, "HRS_iv"},
    {CheckId::hrs_v, "HRS_v"},
    {CheckId::hrs_vi, "HRS_vi"},
    {CheckId::mp_plus, "MP_plus"},
    {CheckId::mp_minus, "MP_minus"},
    {CheckId::ident_ii, "IDENT_ii"},
    {CheckId::note_comm_zero, "NOTE_comm_zero"},
    {CheckId::note_anticomm_double, "NOTE_anticomm_double"},
}};

void require_normalized(const PVector& x) {
    if (!(inner(x, x) == Rational(1))) {
        throw hypothesis_error("hypothesis violated: <x,x> != 1");
    }
}

void require_applicable(const POperator& a, const POperator& b, const PVector& x) {
    require_same_space(a, b);
    if (!a.domain().contains(x)) {
        throw mismatch_error("x outside operator domain");
    }
}

Verdict make_inequality_verdict(CheckId id, Exponent lhs, Exponent rhs, std::string seed) {
    Verdict v;
    v.check = id;
    v.lhs = lhs;
    v.rhs = rhs;
    v.holds = rhs <= lhs;
    v.tight = rhs == lhs;
    v.degenerate = !lhs.is_finite() && !rhs.is_finite();
    v.seed = std::move(seed);
    return v;
}

/// Identity checks assert value = 0 exactly; recorded as the inequality
/// |value| <= 0 so the Verdict invariants hold uniformly.
Verdict make_identity_verdict(CheckId id, const Rational& value, const Prime& p,
                              std::string seed) {
    Verdict v;
    v.check = id;
    v.lhs = Exponent::neg_infinity();
    v.rhs = abs_exp(value, p);
    v.holds = value.is_zero();
    v.tight = v.holds;
    v.degenerate = false;
    v.seed = std::move(seed);
    return v;
}

} // namespace

std::string to_string(CheckId id) {
    for (const auto& [check, name] : check_names) {
        if (check == id) {
            return name;
        }
    }
    throw error("unknown check id");
}

CheckId check_id_from_string(const std::string& name) {
    for (const auto& [check, check_name] : check_names) {
        if (name == check_name) {
            return check;
        }
    }
    throw parse_error("unknown check '" + name + "'");
}

Rational expectation(const POperator& a, const PVector& x) {
    return inner(a.apply(x), x);
}

PVector residual(const POperator& a, const PVector& x) {
    const PVector ax = a.apply(x);
    return sub(ax, scale(inner(ax, x), x));
}

Exponent delta(const POperator& a, const PVector& x) {
    require_normalized(x);
    if (!a.domain().contains(x)) {
        throw mismatch_error("x outside operator domain");
    }
    return residual(a, x).norm();
}

Verdict check_hrs_i(const POperator& a, const POperator& b, const PVector& x, std::string seed) {
    require_applicable(a, b, x);
    require_normalized(x);
    const PVector ax = a.apply(x);
    const PVector bx = b.apply(x);
    const Exponent lhs = delta(a, x) + delta(b, x);
    const Rational gap = inner(ax, bx) - inner(ax, x) * inner(bx, x);
    return make_inequality_verdict(CheckId::hrs_i, lhs, abs_exp(gap, x.prime()), std::move(seed));
}

Verdict check_hrs_ii(const POperator& a, const POperator& b, const PVector& x, std::string seed) {
    require_applicable(a, b, x);
    require_normalized(x);
    if (!a.is_selfadjoint() || !b.is_selfadjoint()) {
        throw hypothesis_error("HRS_ii requires self-adjoint operators");
    }
    const Rational ea = expectation(a, x);
    const Rational eb = expectation(b, x);
    const Rational comm_term = inner(commutator(a, b).apply(x), x);
    const Rational anti_term = inner(anticommutator(a, b).apply(x), x);
    const Rational q = square(comm_term) + square(anti_term - Rational(2) * ea * eb);
    const Exponent lhs = max(delta(a, x), delta(b, x));
    // Division by sqrt|2| is exponent subtraction; it shifts the bound
    // only at p = 2, where |2| = 1/2.
    const Exponent rhs =
        abs_exp(q, x.prime()).half() - abs_exp(Rational(2), x.prime()).half();
    return make_inequality_verdict(CheckId::hrs_ii, lhs, rhs, std::move(seed));
}

Verdict check_identity_ii(const POperator& a, const POperator& b, const PVector& x,
                          std::string seed) {
    require_applicable(a, b, x);
    const Rational ea = expectation(a, x);
    const Rational eb = expectation(b, x);
    const Rational comm_term = inner(commutator(a, b).apply(x), x);
    const Rational anti_term = inner(anticommutator(a, b).apply(x), x);
    const Rational lhs_value = square(comm_term) + square(anti_term - Rational(2) * ea * eb);
    const Rational uab = inner(compose(a, b).apply(x), x);
    const Rational uba = inner(compose(b, a).apply(x), x);
    const Rational rhs_value =
        Rational(2) * square(uab - ea * eb) + Rational(2) * square(uba - ea * eb);
    return make_identity_verdict(CheckId::ident_ii, lhs_value - rhs_value, x.prime(),
                                 std::move(seed));
}

namespace {

/// Shared expectation pieces for HRS_iii/iv: <(A*A)x,x>, <(B*B)x,x>,
/// <(A+B)x,x> and <(A-B)x,x>, with the operator sums evaluated through
/// bilinearity at the vector level.
struct GramTerms {
    Rational astar_a;
    Rational bstar_b;
    Rational sum_exp;
    Rational diff_exp;
};

GramTerms gram_terms(const POperator& a, const POperator& b, const PVector& x) {
    GramTerms t;
    t.astar_a = inner(compose(adjoint(a), a).apply(x), x);
    t.bstar_b = inner(compose(adjoint(b), b).apply(x), x);
    const PVector ax = a.apply(x);
    const PVector bx = b.apply(x);
    t.sum_exp = inner(add(ax, bx), x);
    t.diff_exp = inner(sub(ax, bx), x);
    return t;
}

} // namespace

Verdict check_hrs_iii(const POperator& a, const POperator& b, const PVector& x,
                      std::string seed) {
    require_applicable(a, b, x);
    require_normalized(x);
    const GramTerms t = gram_terms(a, b, x);
    const Rational gap =
        t.astar_a + t.bstar_b - (square(t.sum_exp) + square(t.diff_exp)) / Rational(2);
    const Exponent lhs = max(delta(a, x), delta(b, x));
    return make_inequality_verdict(CheckId::hrs_iii, lhs, abs_exp(gap, x.prime()).half(),
                                   std::move(seed));
}

Verdict check_hrs_iv(const POperator& a, const POperator& b, const PVector& x, std::string seed) {
    require_applicable(a, b, x);
    require_normalized(x);
    const GramTerms t = gram_terms(a, b, x);
    const Rational gap = t.astar_a - t.bstar_b - t.sum_exp * t.diff_exp;
    const Exponent lhs = max(delta(a, x), delta(b, x));
    return make_inequality_verdict(CheckId::hrs_iv, lhs, abs_exp(gap, x.prime()).half(),
                                   std::move(seed));
}

namespace {

Verdict check_combined(CheckId id, const POperator& a, const POperator& b, const PVector& x,
                       bool plus, std::string seed) {
    require_applicable(a, b, x);
    require_normalized(x);
    const PVector ax = a.apply(x);
    const PVector bx = b.apply(x);
    const PVector cx = plus ? add(ax, bx) : sub(ax, bx);
    const Rational gap = inner(cx, cx) - square(inner(cx, x));
    const Exponent lhs = max(delta(a, x), delta(b, x));
    return make_inequality_verdict(id, lhs, abs_exp(gap, x.prime()).half(), std::move(seed));
}

} // namespace

Verdict check_hrs_v(const POperator& a, const POperator& b, const PVector& x, std::string seed) {
    return check_combined(CheckId::hrs_v, a, b, x, true, std::move(seed));
}

Verdict check_hrs_vi(const POperator& a, const POperator& b, const PVector& x, std::string seed) {
    return check_combined(CheckId::hrs_vi, a, b, x, false, std::move(seed));
}

Verdict check_mp(const POperator& a, const POperator& b, const PVector& x, const PVector& y,
                 MpSign sign, std::string seed) {
    require_applicable(a, b, x);
    require_normalized(x);
    require_same_space(x, y);
    if (!inner(x, y).is_zero()) {
        throw hypothesis_error("witness violates inner(x, y) = 0");
    }
    const Exponent ny = y.norm();
    if (ny.is_finite() && ny.twice() > 0) {
        throw hypothesis_error("witness violates norm(y) <= 1");
    }
    const PVector ax = a.apply(x);
    const PVector bx = b.apply(x);
    const PVector cx = sign == MpSign::plus ? add(ax, bx) : sub(ax, bx);
    const Exponent lhs = max(delta(a, x), delta(b, x));
    Verdict v = make_inequality_verdict(sign == MpSign::plus ? CheckId::mp_plus : CheckId::mp_minus,
                                        lhs, abs_exp(inner(cx, y), x.prime()), std::move(seed));
    v.degenerate = v.degenerate || y.is_zero();
    return v;
}

std::pair<Verdict, Verdict> check_notes(const POperator& a, const POperator& b, const PVector& x,
                                        std::string seed) {
    require_applicable(a, b, x);
    if (!a.is_selfadjoint() || !b.is_selfadjoint()) {
        throw hypothesis_error("NOTE checks require self-adjoint operators");
    }
    const Rational comm_term = inner(commutator(a, b).apply(x), x);
    const Rational anti_term = inner(anticommutator(a, b).apply(x), x);
    const Rational ab_term = inner(compose(a, b).apply(x), x);
    Verdict comm = make_identity_verdict(CheckId::note_comm_zero, comm_term, x.prime(), seed);
    Verdict anti = make_identity_verdict(CheckId::note_anticomm_double,
                                         anti_term - Rational(2) * ab_term, x.prime(),
                                         std::move(seed));
    return {std::move(comm), std::move(anti)};
}

} // namespace padic
