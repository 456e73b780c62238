#pragma once

#include <cstdint>
#include <string_view>

namespace amnet {

/// FNV-1a over bytes; used for stream labels and state hashing.
inline std::uint64_t fnv1a64(std::string_view text, std::uint64_t hash = 0xcbf29ce484222325ull) {
    for (unsigned char c : text) {
        hash ^= static_cast<std::uint64_t>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

/// SplitMix64 generator (Steele, Lea, Flood 2014). Fixed algorithm so the
/// same seed yields the same event sequence on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    /// Uniform index in [0, n). Modulo bias is irrelevant at simulation scale
    /// and keeps the draw count fixed at one.
    std::size_t next_below(std::size_t n) {
        return n == 0 ? 0 : static_cast<std::size_t>(next_u64() % n);
    }

    /// Independent substream for a labelled component. Fraud injectors and
    /// each traffic block draw from their own stream, so enabling one never
    /// perturbs another for the same master seed.
    static SeededRng stream(std::uint64_t master_seed, std::string_view label) {
        SeededRng mixer(master_seed ^ fnv1a64(label));
        return SeededRng(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

}  // namespace amnet
