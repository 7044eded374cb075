#pragma once

#include <array>
#include <cstdint>

namespace parrondo {

// SplitMix64 finalization step (Steele, Lea & Flood; public domain reference
// implementation by Vigna). Used for seed expansion and stream derivation.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derive the seed of substream `stream` from a base seed. Two SplitMix64
// rounds over the mixed pair; independent of the order streams are asked for,
// which is what makes trial-level and cell-level parallelism reproducible.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t stream) {
    std::uint64_t s = base_seed ^ (0xA0761D6478BD642FULL + stream * 0xE7037ED1A0B428DBULL);
    splitmix64_next(s);
    std::uint64_t out = splitmix64_next(s);
    return out;
}

// xoshiro256++ (Blackman & Vigna 2019). Small, fast, and identical output on
// every platform, unlike the standard-library distributions.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 mantissa bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

inline Xoshiro256pp substream(std::uint64_t base_seed, std::uint64_t stream) {
    return Xoshiro256pp(derive_seed(base_seed, stream));
}

}  // namespace parrondo
