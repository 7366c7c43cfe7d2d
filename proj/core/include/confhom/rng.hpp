// Deterministic random number generation.
//
// All randomized operations take an explicit 64-bit seed and must produce
// identical output on every platform.  std::mt19937_64 is fully specified,
// so we use it directly; the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined.

#pragma once

#include <cstdint>
#include <random>

namespace confhom {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, bound), bound >= 1.  Modulo bias is below
    /// 2^-32 for the bounds used here (all far below 2^32).
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    /// Uniform draw from [lo, hi] inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace confhom
