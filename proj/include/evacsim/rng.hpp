#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace evacsim {

/// PCG32 (PCG-XSH-RR 64/32, M.E. O'Neill, pcg-random.org).
///
/// This is the one generator the whole simulator draws from. It is fixed so
/// that runs reproduce bit-for-bit across platforms and so that independent
/// reimplementations (oracles, ports to other languages) can consume the
/// identical stream:
///
///   state' = state * 6364136223846793005 + inc        (mod 2^64, inc odd)
///   output = rotr32(((state >> 18) ^ state) >> 27, state >> 59)
///
/// Seeding follows the reference pcg32_srandom: state = 0, inc = (seq<<1)|1,
/// advance once, state += seed, advance again.
class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t seq = 0) {
        state_ = 0;
        inc_ = (seq << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Unbiased uniform draw in [0, bound) via rejection. bound must be >= 1.
    /// Always consumes at least one draw, including for bound == 1.
    std::uint32_t below(std::uint32_t bound) {
        std::uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            std::uint32_t r = next_u32();
            if (r >= threshold) return r % bound;
        }
    }

    /// Fisher-Yates shuffle, iterating i = n-1 .. 1, j = below(i+1).
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(static_cast<std::uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    bool operator==(const Pcg32&) const = default;

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 1;
};

/// SplitMix64 finalizer, used only to derive per-run seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// FNV-1a 64-bit hash of a string (scenario names).
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Seed of repetition `rep` of the named scenario under `master_seed`.
/// Parallel and serial sweeps use the same derivation, so execution order
/// never changes results.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view scenario_name,
                                     std::uint64_t rep) {
    std::uint64_t x = splitmix64(master_seed ^ fnv1a64(scenario_name));
    return splitmix64(x ^ rep);
}

} // namespace evacsim
