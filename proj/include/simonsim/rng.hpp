#pragma once

#include <cstdint>

namespace simonsim {

// Deterministic 64-bit generator (splitmix64). Used everywhere instead of
// std engines so that seeded outputs are byte-identical across platforms.
// Per-shot streams are derived from (master seed, shot index), so shot-level
// parallelism cannot change results.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of randomness.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound) without modulo bias worth caring about here.
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    bool next_bool(double p_true) { return next_double() < p_true; }

    // Stream derivation for independent sub-generators.
    static Rng derive(std::uint64_t master_seed, std::uint64_t stream_index) {
        Rng mixer(master_seed ^ (0x6a09e667f3bcc909ULL + stream_index * 0x9e3779b97f4a7c15ULL));
        return Rng(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

}  // namespace simonsim
