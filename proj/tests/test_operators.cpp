#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padic/errors.hpp"
#include "padic/operator.hpp"
#include "padic/rng.hpp"
#include "padic/sampling.hpp"

using namespace padic;

namespace {

POperator dense2(const Prime& p, long a, long b, long c, long d) {
    return POperator::dense(p, 2, {Rational(a), Rational(b), Rational(c), Rational(d)});
}

POperator random_dense(const Prime& p, std::uint32_t d, SplitRng& rng, bool symmetric) {
    std::vector<Rational> m(static_cast<std::size_t>(d) * d, Rational(0));
    for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = symmetric ? i : 0; j < d; ++j) {
            const Rational v = random_rational_mixed(rng, 9, p);
            m[i * d + j] = v;
            if (symmetric) {
                m[j * d + i] = v;
            }
        }
    }
    return POperator::dense(p, d, std::move(m));
}

PVector random_vector(const Prime& p, std::uint32_t d, SplitRng& rng) {
    std::vector<PVector::Coord> coords;
    for (std::uint32_t i = 0; i < d; ++i) {
        const Rational v = random_rational_mixed(rng, 9, p);
        if (!v.is_zero()) {
            coords.emplace_back(i, v);
        }
    }
    return PVector(p, d, std::move(coords));
}

} // namespace

TEST_CASE("dense apply") {
    const Prime p(5);
    const PVector x(p, 2, {{0, Rational(3, 5)}, {1, Rational(4, 5)}});
    CHECK(POperator::identity(p, 2).apply(x) == x);

    const POperator a = dense2(p, 1, 0, 0, 2);
    const PVector ax = a.apply(x);
    CHECK(ax.at(0) == Rational(3, 5));
    CHECK(ax.at(1) == Rational(8, 5));

    CHECK_THROWS_AS(a.apply(PVector::basis(p, 3, 0)), mismatch_error);
    CHECK_THROWS_AS(a.apply(PVector::basis(Prime(7), 2, 0)), mismatch_error);
    CHECK_THROWS_AS(a.apply(PVector::basis(p, std::nullopt, 0)), mismatch_error);
}

TEST_CASE("diagonal apply with default rule") {
    const Prime p(5);
    // a_n = p^(-n)
    const POperator a = POperator::diagonal(p, {}, Rational(1), -1);
    const PVector e3 = PVector::basis(p, std::nullopt, 3);
    const PVector out = a.apply(e3);
    CHECK(out.at(3) == Rational(1, 125));

    const POperator with_entries =
        POperator::diagonal(p, {{3, Rational(7)}}, Rational(1), -1);
    CHECK(with_entries.apply(e3).at(3) == Rational(7));
    CHECK(with_entries.diagonal_entry(2) == Rational(1, 25));

    CHECK_THROWS_AS(a.apply(PVector::basis(p, 2, 0)), mismatch_error);
}

TEST_CASE("adjoint") {
    const Prime p(3);
    const POperator nilpotent = dense2(p, 0, 1, 0, 0);
    CHECK(adjoint(nilpotent) == dense2(p, 0, 0, 1, 0));
    CHECK(!nilpotent.is_selfadjoint());

    const POperator diag = POperator::diagonal(p, {{0, Rational(1)}, {1, Rational(2)}});
    CHECK(adjoint(diag) == diag);
    CHECK(diag.is_selfadjoint());

    SplitRng rng(21);
    for (int i = 0; i < 400; ++i) {
        const std::uint32_t d = 2 + static_cast<std::uint32_t>(rng.index(3));
        const POperator a = random_dense(p, d, rng, false);
        const PVector x = random_vector(p, d, rng);
        const PVector y = random_vector(p, d, rng);
        CHECK(inner(a.apply(x), y) == inner(x, adjoint(a).apply(y)));
        CHECK(adjoint(adjoint(a)) == a);
        CHECK(random_dense(p, d, rng, true).is_selfadjoint());
    }
}

TEST_CASE("commutator and anticommutator") {
    const Prime p(5);
    const POperator swap = dense2(p, 0, 1, 1, 0);
    const POperator sign = dense2(p, 1, 0, 0, -1);
    CHECK(commutator(swap, sign) == dense2(p, 0, -2, 2, 0));
    CHECK(commutator(swap, swap) == dense2(p, 0, 0, 0, 0));

    const POperator id = POperator::identity(p, 2);
    CHECK(anticommutator(id, sign) == op_scale(Rational(2), sign));

    SplitRng rng(17);
    for (int i = 0; i < 200; ++i) {
        const POperator a = random_dense(p, 3, rng, false);
        const POperator b = random_dense(p, 3, rng, false);
        const POperator c = random_dense(p, 3, rng, false);
        CHECK(commutator(a, b) == op_neg(commutator(b, a)));
        CHECK(anticommutator(a, b) == anticommutator(b, a));
        CHECK(commutator(op_add(a, c), b) == op_add(commutator(a, b), commutator(c, b)));
        const Rational s = random_rational_mixed(rng, 9, p);
        CHECK(commutator(op_scale(s, a), b) == op_scale(s, commutator(a, b)));
    }
}

TEST_CASE("diagonal rule algebra") {
    const Prime p(3);
    const POperator a = POperator::diagonal(p, {{1, Rational(5)}}, Rational(2), -1);
    const POperator b = POperator::diagonal(p, {{2, Rational(1, 3)}}, Rational(1, 2), 2);

    const POperator ab = compose(a, b);
    CHECK(ab.as_diagonal().rule_slope == 1);
    CHECK(ab.as_diagonal().rule_coeff == Rational(1));
    // index 1: a has the explicit 5, b falls back to its rule (1/2)*3^2.
    CHECK(ab.diagonal_entry(1) == Rational(5) * Rational(9, 2));
    CHECK(ab.diagonal_entry(0) == a.diagonal_entry(0) * b.diagonal_entry(0));

    CHECK(commutator(a, b) == POperator::diagonal(p, {}));
    CHECK(anticommutator(a, b) == op_scale(Rational(2), ab));

    CHECK_THROWS_AS(op_add(a, b), error); // different slopes

    const POperator finite_rank = POperator::diagonal(p, {{0, Rational(4)}});
    const POperator shifted = op_add(finite_rank, POperator::identity_c0(p));
    CHECK(shifted.diagonal_entry(0) == Rational(5));
    CHECK(shifted.diagonal_entry(9) == Rational(1));

    // Explicit entries matching the rule are pruned, so equal operators
    // built differently compare equal.
    const POperator spelled_out =
        POperator::diagonal(p, {{2, Rational(2, 81)}}, Rational(2), -2);
    CHECK(spelled_out == POperator::diagonal(p, {}, Rational(2), -2));
}

TEST_CASE("operator space mismatches") {
    const Prime p(5);
    const POperator a = dense2(p, 1, 0, 0, 1);
    CHECK_THROWS_AS(op_add(a, POperator::identity(p, 3)), mismatch_error);
    CHECK_THROWS_AS(compose(a, POperator::identity_c0(p)), mismatch_error);
    CHECK_THROWS_AS(op_add(a, dense2(Prime(7), 1, 0, 0, 1)), mismatch_error);
}

TEST_CASE("domain descriptors") {
    const Prime p(5);
    const POperator a = dense2(p, 1, 2, 3, 4);
    CHECK(a.domain().contains(PVector::basis(p, 2, 0)));
    CHECK(!a.domain().contains(PVector::basis(p, 3, 0)));
    CHECK(!a.domain().contains(PVector::basis(p, std::nullopt, 0)));
    CHECK(!a.domain().contains(PVector::basis(Prime(7), 2, 0)));

    const POperator d = POperator::identity_c0(p);
    CHECK(d.domain().contains(PVector::basis(p, std::nullopt, 12)));
    CHECK(!d.domain().contains(PVector::basis(p, 2, 0)));
}
