#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace subrec {

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64_mix(uint64_t h, uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Seeded RNG wrapper. std::uniform_*_distribution is implementation-defined,
// so bounded draws and unit doubles are produced here explicitly; output is
// identical across platforms for a given seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // Derive an independent stream from (seed, tag, a, b).
    static Rng derive(uint64_t seed, std::string_view tag, uint64_t a = 0, uint64_t b = 0) {
        uint64_t h = fnv1a64(tag);
        h = fnv1a64_mix(h, seed);
        h = fnv1a64_mix(h, a);
        h = fnv1a64_mix(h, b);
        return Rng(h);
    }

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Unbiased uniform integer in [0, n), n >= 1 (rejection sampling).
    uint32_t bounded(uint32_t n) {
        if (n <= 1) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return static_cast<uint32_t>(v % n);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace subrec
