#include "padic/vector.hpp"

#include <algorithm>
#include <string>

namespace padic {

PVector::PVector(Prime p, std::optional<std::uint32_t> dim, std::vector<Coord> coords)
    : p_(std::move(p)), dim_(dim), coords_(std::move(coords)) {
    std::sort(coords_.begin(), coords_.end(),
              [](const Coord& a, const Coord& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i - 1].first == coords_[i].first) {
            throw error("duplicate coordinate index " + std::to_string(coords_[i].first));
        }
    }
    std::erase_if(coords_, [](const Coord& c) { return c.second.is_zero(); });
    if (dim_) {
        if (*dim_ == 0) {
            throw error("vector dimension must be positive");
        }
        for (const Coord& c : coords_) {
            if (c.first >= *dim_) {
                throw error("coordinate index " + std::to_string(c.first) +
                            " out of range for dimension " + std::to_string(*dim_));
            }
        }
    }
}

Rational PVector::at(std::uint32_t index) const {
    const auto it = std::lower_bound(
        coords_.begin(), coords_.end(), index,
        [](const Coord& c, std::uint32_t i) { return c.first < i; });
    if (it != coords_.end() && it->first == index) {
        return it->second;
    }
    return Rational(0);
}

NormValue PVector::norm() const {
    NormValue best = Exponent::neg_infinity();
    for (const Coord& c : coords_) {
        best = max(best, abs_exp(c.second, p_));
    }
    return best;
}

bool operator==(const PVector& a, const PVector& b) {
    return a.p_ == b.p_ && a.dim_ == b.dim_ && a.coords_ == b.coords_;
}

void require_same_space(const PVector& a, const PVector& b) {
    if (a.prime() != b.prime()) {
        throw mismatch_error("vectors over different primes");
    }
    if (a.dim() != b.dim()) {
        throw mismatch_error("vectors of incompatible dimensions");
    }
}

namespace {

template <typename Combine>
PVector merge(const PVector& a, const PVector& b, Combine combine) {
    require_same_space(a, b);
    std::vector<PVector::Coord> out;
    out.reserve(a.coords().size() + b.coords().size());
    auto ia = a.coords().begin();
    auto ib = b.coords().begin();
    while (ia != a.coords().end() || ib != b.coords().end()) {
        if (ib == b.coords().end() || (ia != a.coords().end() && ia->first < ib->first)) {
            out.emplace_back(ia->first, combine(ia->second, Rational(0)));
            ++ia;
        } else if (ia == a.coords().end() || ib->first < ia->first) {
            out.emplace_back(ib->first, combine(Rational(0), ib->second));
            ++ib;
        } else {
            out.emplace_back(ia->first, combine(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return PVector(a.prime(), a.dim(), std::move(out));
}

} // namespace

PVector add(const PVector& a, const PVector& b) {
    return merge(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

PVector sub(const PVector& a, const PVector& b) {
    return merge(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

PVector negate(const PVector& a) {
    return scale(Rational(-1), a);
}

PVector scale(const Rational& c, const PVector& a) {
    std::vector<PVector::Coord> out;
    out.reserve(a.coords().size());
    for (const auto& [i, v] : a.coords()) {
        out.emplace_back(i, c * v);
    }
    return PVector(a.prime(), a.dim(), std::move(out));
}

Rational inner(const PVector& a, const PVector& b) {
    require_same_space(a, b);
    Rational acc(0);
    auto ia = a.coords().begin();
    auto ib = b.coords().begin();
    while (ia != a.coords().end() && ib != b.coords().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            acc += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

} // namespace padic
