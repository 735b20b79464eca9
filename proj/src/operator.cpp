#include "padic/operator.hpp"

#include <set>
#include <string>
#include <utility>

#include "padic/errors.hpp"

namespace padic {

bool DomainDescriptor::contains(const PVector& x) const {
    if (x.prime() != p) {
        return false;
    }
    if (kind == Kind::all_of_kd) {
        return x.dim().has_value() && *x.dim() == d;
    }
    return x.is_c0();
}

namespace {

bool dense_symmetric(const POperator::Dense& m) {
    for (std::uint32_t i = 0; i < m.d; ++i) {
        for (std::uint32_t j = i + 1; j < m.d; ++j) {
            if (!(m.at(i, j) == m.at(j, i))) {
                return false;
            }
        }
    }
    return true;
}

/// Drops explicit entries that coincide with the rule value and
/// normalizes the no-rule form to (0, 0).
POperator::Diagonal canonical(POperator::Diagonal d, const Prime& p) {
    if (d.rule_coeff.is_zero()) {
        d.rule_slope = 0;
    }
    std::erase_if(d.entries, [&](const auto& kv) {
        const Rational rule_value =
            d.rule_coeff.is_zero()
                ? Rational(0)
                : d.rule_coeff * p.pow_rational(d.rule_slope * static_cast<std::int64_t>(kv.first));
        return kv.second == rule_value;
    });
    return d;
}

} // namespace

POperator::POperator(Prime p, Dense d) : p_(std::move(p)), body_(std::move(d)) {
    selfadjoint_ = dense_symmetric(std::get<Dense>(body_));
}

POperator::POperator(Prime p, Diagonal d)
    : p_(p), body_(canonical(std::move(d), p)), selfadjoint_(true) {}

POperator POperator::dense(Prime p, std::uint32_t d, std::vector<Rational> row_major) {
    if (d == 0) {
        throw error("dense operator dimension must be positive");
    }
    if (row_major.size() != static_cast<std::size_t>(d) * d) {
        throw error("dense operator needs " + std::to_string(d) + "x" + std::to_string(d) +
                    " entries");
    }
    return POperator(std::move(p), Dense{d, std::move(row_major)});
}

POperator POperator::diagonal(Prime p, std::map<std::uint32_t, Rational> entries,
                              Rational rule_coeff, std::int64_t rule_slope) {
    return POperator(std::move(p), Diagonal{std::move(entries), std::move(rule_coeff), rule_slope});
}

POperator POperator::identity(Prime p, std::uint32_t d) {
    std::vector<Rational> a(static_cast<std::size_t>(d) * d, Rational(0));
    for (std::uint32_t i = 0; i < d; ++i) {
        a[i * d + i] = Rational(1);
    }
    return dense(std::move(p), d, std::move(a));
}

POperator POperator::identity_c0(Prime p) {
    return diagonal(std::move(p), {}, Rational(1), 0);
}

Rational POperator::diagonal_entry(std::uint32_t n) const {
    const Diagonal& d = as_diagonal();
    if (const auto it = d.entries.find(n); it != d.entries.end()) {
        return it->second;
    }
    if (d.rule_coeff.is_zero()) {
        return Rational(0);
    }
    return d.rule_coeff * p_.pow_rational(d.rule_slope * static_cast<std::int64_t>(n));
}

DomainDescriptor POperator::domain() const {
    if (is_dense()) {
        return DomainDescriptor{DomainDescriptor::Kind::all_of_kd, p_, as_dense().d};
    }
    return DomainDescriptor{DomainDescriptor::Kind::finitely_supported, p_, 0};
}

PVector POperator::apply(const PVector& x) const {
    if (!domain().contains(x)) {
        throw mismatch_error("vector outside operator domain");
    }
    if (is_dense()) {
        const Dense& m = as_dense();
        std::vector<PVector::Coord> out;
        for (std::uint32_t i = 0; i < m.d; ++i) {
            Rational acc(0);
            for (const auto& [j, v] : x.coords()) {
                acc += m.at(i, j) * v;
            }
            if (!acc.is_zero()) {
                out.emplace_back(i, acc);
            }
        }
        return PVector(p_, m.d, std::move(out));
    }
    std::vector<PVector::Coord> out;
    out.reserve(x.coords().size());
    for (const auto& [n, v] : x.coords()) {
        out.emplace_back(n, diagonal_entry(n) * v);
    }
    return PVector(p_, std::nullopt, std::move(out));
}

bool operator==(const POperator& a, const POperator& b) {
    if (a.p_ != b.p_ || a.is_dense() != b.is_dense()) {
        return false;
    }
    if (a.is_dense()) {
        return a.as_dense().d == b.as_dense().d && a.as_dense().a == b.as_dense().a;
    }
    const auto& da = a.as_diagonal();
    const auto& db = b.as_diagonal();
    return da.rule_coeff == db.rule_coeff && da.rule_slope == db.rule_slope &&
           da.entries == db.entries;
}

void require_same_space(const POperator& a, const POperator& b) {
    if (a.prime() != b.prime()) {
        throw mismatch_error("operators over different primes");
    }
    if (a.is_dense() != b.is_dense()) {
        throw mismatch_error("operators on different spaces");
    }
    if (a.is_dense() && a.as_dense().d != b.as_dense().d) {
        throw mismatch_error("dense operators of different dimensions");
    }
}

POperator adjoint(const POperator& a) {
    if (!a.is_dense()) {
        return a;
    }
    const auto& m = a.as_dense();
    std::vector<Rational> t(m.a.size(), Rational(0));
    for (std::uint32_t i = 0; i < m.d; ++i) {
        for (std::uint32_t j = 0; j < m.d; ++j) {
            t[j * m.d + i] = m.at(i, j);
        }
    }
    return POperator::dense(a.prime(), m.d, std::move(t));
}

namespace {

std::set<std::uint32_t> explicit_indices(const POperator& a, const POperator& b) {
    std::set<std::uint32_t> idx;
    for (const auto& [n, v] : a.as_diagonal().entries) {
        idx.insert(n);
    }
    for (const auto& [n, v] : b.as_diagonal().entries) {
        idx.insert(n);
    }
    return idx;
}

template <typename Combine>
POperator combine_dense(const POperator& a, const POperator& b, Combine f) {
    const auto& ma = a.as_dense();
    const auto& mb = b.as_dense();
    std::vector<Rational> out(ma.a.size(), Rational(0));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = f(ma.a[k], mb.a[k]);
    }
    return POperator::dense(a.prime(), ma.d, std::move(out));
}

template <typename Combine>
POperator combine_diagonal(const POperator& a, const POperator& b, Combine f) {
    const auto& da = a.as_diagonal();
    const auto& db = b.as_diagonal();
    Rational coeff;
    std::int64_t slope = 0;
    if (da.rule_coeff.is_zero()) {
        coeff = f(Rational(0), db.rule_coeff);
        slope = db.rule_slope;
    } else if (db.rule_coeff.is_zero()) {
        coeff = f(da.rule_coeff, Rational(0));
        slope = da.rule_slope;
    } else if (da.rule_slope == db.rule_slope) {
        coeff = f(da.rule_coeff, db.rule_coeff);
        slope = da.rule_slope;
    } else {
        throw error("sum of diagonal rules with different slopes is not a diagonal rule");
    }
    std::map<std::uint32_t, Rational> entries;
    for (std::uint32_t n : explicit_indices(a, b)) {
        entries.emplace(n, f(a.diagonal_entry(n), b.diagonal_entry(n)));
    }
    return POperator::diagonal(a.prime(), std::move(entries), std::move(coeff), slope);
}

} // namespace

POperator compose(const POperator& a, const POperator& b) {
    require_same_space(a, b);
    if (a.is_dense()) {
        const auto& ma = a.as_dense();
        const auto& mb = b.as_dense();
        std::vector<Rational> out(ma.a.size(), Rational(0));
        for (std::uint32_t i = 0; i < ma.d; ++i) {
            for (std::uint32_t k = 0; k < ma.d; ++k) {
                if (ma.at(i, k).is_zero()) {
                    continue;
                }
                for (std::uint32_t j = 0; j < ma.d; ++j) {
                    out[i * ma.d + j] += ma.at(i, k) * mb.at(k, j);
                }
            }
        }
        return POperator::dense(a.prime(), ma.d, std::move(out));
    }
    const auto& da = a.as_diagonal();
    const auto& db = b.as_diagonal();
    std::map<std::uint32_t, Rational> entries;
    for (std::uint32_t n : explicit_indices(a, b)) {
        entries.emplace(n, a.diagonal_entry(n) * b.diagonal_entry(n));
    }
    return POperator::diagonal(a.prime(), std::move(entries), da.rule_coeff * db.rule_coeff,
                               da.rule_slope + db.rule_slope);
}

POperator op_add(const POperator& a, const POperator& b) {
    require_same_space(a, b);
    if (a.is_dense()) {
        return combine_dense(a, b, [](const Rational& x, const Rational& y) { return x + y; });
    }
    return combine_diagonal(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

POperator op_sub(const POperator& a, const POperator& b) {
    require_same_space(a, b);
    if (a.is_dense()) {
        return combine_dense(a, b, [](const Rational& x, const Rational& y) { return x - y; });
    }
    return combine_diagonal(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

POperator op_neg(const POperator& a) {
    return op_scale(Rational(-1), a);
}

POperator op_scale(const Rational& c, const POperator& a) {
    if (a.is_dense()) {
        const auto& m = a.as_dense();
        std::vector<Rational> out;
        out.reserve(m.a.size());
        for (const Rational& v : m.a) {
            out.push_back(c * v);
        }
        return POperator::dense(a.prime(), m.d, std::move(out));
    }
    const auto& d = a.as_diagonal();
    std::map<std::uint32_t, Rational> entries;
    for (const auto& [n, v] : d.entries) {
        entries.emplace(n, c * v);
    }
    return POperator::diagonal(a.prime(), std::move(entries), c * d.rule_coeff, d.rule_slope);
}

POperator commutator(const POperator& a, const POperator& b) {
    return op_sub(compose(a, b), compose(b, a));
}

POperator anticommutator(const POperator& a, const POperator& b) {
    return op_add(compose(a, b), compose(b, a));
}

} // namespace padic
