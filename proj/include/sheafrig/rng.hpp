#pragma once

#include <cstdint>

namespace sheafrig {

// splitmix64. Self-contained so that seeded runs produce identical streams on
// every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), rejection-sampled.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi], inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    // Deterministic sub-stream, e.g. one per trial of a randomized suite.
    Rng child(std::uint64_t salt) const {
        Rng mix(state_ ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
        mix.next();
        return mix;
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace sheafrig
