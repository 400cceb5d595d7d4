#pragma once

#include <cstdint>

namespace spantree {

// Generator identity recorded in every batch's metadata.
inline constexpr const char* kGeneratorId = "xoshiro256++";

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& s : s_) s = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via Box-Muller; draws two uniforms per call.
    double gaussian() {
        double u1, u2;
        do { u1 = uniform(); } while (u1 <= 0.0);
        u2 = uniform();
        return __builtin_sqrt(-2.0 * __builtin_log(u1)) * __builtin_cos(6.283185307179586477 * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// Decorrelated sub-seed for a named domain (graph sampling, W sampling, ...).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t domain) {
    SplitMix64 sm(seed ^ (0xA0761D6478BD642FULL * (domain + 1)));
    return sm.next();
}

// Independent stream per sample index, so results do not depend on how the
// index range is split across workers.
inline Xoshiro256pp stream_rng(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 sm(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
    return Xoshiro256pp(sm.next());
}

}  // namespace spantree
