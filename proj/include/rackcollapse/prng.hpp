#pragma once

#include <cstdint>

namespace rackcollapse {

// xoshiro256** by Blackman & Vigna (public domain), seeded via splitmix64.
// All randomized searches in this library use this generator so that a
// (seed, budget) pair pins the exact candidate sequence.
class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : s_) {
            x += 0x9e3779b97f4a7c15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, bound) without modulo bias (rejection sampling).
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        const uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace rackcollapse
