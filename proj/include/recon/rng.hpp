#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace recon {

// All randomness in this project flows through Rng: a std::mt19937_64 engine
// plus hand-rolled sampling helpers. The standard distributions are not used
// because their output is implementation-defined; rejection sampling on the
// raw 64-bit stream keeps results identical across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [lo, hi], inclusive, unbiased
    int uniform_int(int lo, int hi) {
        assert(hi >= lo);
        std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<int>(bounded(range));
    }

    // uniform in [0, n)
    std::size_t index(std::size_t n) {
        assert(n > 0);
        return static_cast<std::size_t>(bounded(n));
    }

    // uniform in [0, 1) with 53 random bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::uint64_t bounded(std::uint64_t range) {
        // rejection sampling to avoid modulo bias
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % range;
    }

    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Combines a seed with a stream tag. Used everywhere a run seed is split into
// per-phase or per-row substreams; the derivation is part of the public
// reproducibility contract (see README).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(seed ^ (splitmix64(tag) + 0x9e3779b97f4a7c15ULL));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix_seed(mix_seed(seed, a), b);
}

} // namespace recon
