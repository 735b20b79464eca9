#include "padic/sampling.hpp"

#include <algorithm>

#include "padic/errors.hpp"

namespace padic {

Rational random_rational(SplitRng& rng, int bound) {
    const std::int64_t num = rng.uniform(-bound, bound);
    const std::int64_t den = rng.uniform(1, bound);
    return Rational(static_cast<long>(num), static_cast<long>(den));
}

Rational random_rational_mixed(SplitRng& rng, int bound, const Prime& p) {
    const Rational base = random_rational(rng, bound);
    const std::int64_t k = rng.uniform(-2, 2);
    return base * p.pow_rational(k);
}

std::vector<Rational> unit_quadric_point(const std::vector<Rational>& u) {
    Rational s(0);
    for (const Rational& uk : u) {
        s += square(uk);
    }
    const Rational denom = Rational(1) + s;
    std::vector<Rational> x;
    x.reserve(u.size() + 1);
    x.push_back((Rational(1) - s) / denom);
    for (const Rational& uk : u) {
        x.push_back(Rational(2) * uk / denom);
    }
    return x;
}

namespace {

PVector place_quadric_point(const Prime& p, std::optional<std::uint32_t> dim,
                            const std::vector<std::uint32_t>& indices, SplitRng& rng,
                            int size_bound) {
    // Redraw a few times if a coordinate lands on zero (u_k = 0, or
    // s = 1 zeroing the first slot). Basis-like vectors make entire
    // instance families vacuous for diagonal operators, so the sampler
    // prefers full-support points; degenerate vectors stay reachable
    // through explicit construction.
    std::vector<Rational> values;
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Rational> u(indices.size() - 1);
        for (Rational& uk : u) {
            uk = random_rational(rng, size_bound);
        }
        values = unit_quadric_point(u);
        bool full_support = true;
        for (const Rational& v : values) {
            full_support = full_support && !v.is_zero();
        }
        if (full_support) {
            break;
        }
    }
    std::vector<PVector::Coord> coords;
    coords.reserve(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        coords.emplace_back(indices[j], values[j]);
    }
    return PVector(p, dim, std::move(coords));
}

std::vector<std::uint32_t> distinct_indices(std::uint32_t count, std::uint32_t window,
                                            SplitRng& rng) {
    std::vector<std::uint32_t> pool(window);
    for (std::uint32_t i = 0; i < window; ++i) {
        pool[i] = i;
    }
    // Partial Fisher-Yates: the first `count` slots end up a uniform draw.
    for (std::uint32_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::uint32_t>(rng.index(window - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace

PVector sample_normalized(const Prime& p, std::uint32_t d, SplitRng& rng, int size_bound) {
    if (d < 2) {
        throw error("normalized sampling requires dimension >= 2");
    }
    std::vector<std::uint32_t> indices(d);
    for (std::uint32_t i = 0; i < d; ++i) {
        indices[i] = i;
    }
    return place_quadric_point(p, d, indices, rng, size_bound);
}

PVector sample_normalized_c0(const Prime& p, std::uint32_t support_size, std::uint32_t window,
                             SplitRng& rng, int size_bound) {
    if (support_size < 2) {
        throw error("normalized sampling requires support size >= 2");
    }
    if (window < support_size) {
        throw error("index window smaller than requested support");
    }
    const auto indices = distinct_indices(support_size, window, rng);
    return place_quadric_point(p, std::nullopt, indices, rng, size_bound);
}

PVector orthogonal_witness(const PVector& x, SplitRng& rng, int size_bound) {
    if (!(inner(x, x) == Rational(1))) {
        throw hypothesis_error("orthogonal witness requires inner(x, x) = 1");
    }
    // Index range for the raw draw: the whole space for K^d, the support
    // plus a little headroom for the sequence space.
    std::uint32_t window;
    if (x.dim()) {
        window = *x.dim();
    } else {
        window = x.coords().empty() ? 0 : x.coords().back().first + 1;
        window += 3;
    }
    std::vector<PVector::Coord> zc;
    for (std::uint32_t i = 0; i < window; ++i) {
        const Rational v = random_rational_mixed(rng, size_bound, x.prime());
        if (!v.is_zero()) {
            zc.emplace_back(i, v);
        }
    }
    const PVector z(x.prime(), x.dim(), std::move(zc));
    const PVector w = sub(z, scale(inner(z, x), x));
    const Exponent e = w.norm();
    if (!e.is_finite() || e.twice() <= 0) {
        return w;
    }
    // norm(w) = p^e with e > 0: multiplying by p^e divides the magnitude
    // by p^e, landing the norm exactly on 1.
    return scale(x.prime().pow_rational(e.twice() / 2), w);
}

} // namespace padic
