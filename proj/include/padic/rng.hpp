#pragma once

#include <cstdint>

namespace padic {

/// Deterministic splittable generator used by every sampler and campaign.
/// The core step is the SplitMix64 finalizer; the algorithm is fixed so a
/// given (seed, derivation path) pair produces the same stream on every
/// build. derive() folds a tag into the state, giving independent streams
/// per (prime, dim, class, trial) without shared mutable state.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    SplitRng derive(std::uint64_t tag) const {
        SplitRng child(mix(state_ + 0x9e3779b97f4a7c15ULL * (tag + 1)));
        return child;
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform draw from [lo, hi], endpoints included. Uses rejection to
    /// stay unbiased and deterministic.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) {
            return static_cast<std::int64_t>(next_u64());
        }
        const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
        std::uint64_t draw = next_u64();
        while (draw >= limit) {
            draw = next_u64();
        }
        return lo + static_cast<std::int64_t>(draw % span);
    }

    /// Uniform index in [0, n).
    std::uint64_t index(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
    }

    bool coin() { return (next_u64() & 1) != 0; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace padic
