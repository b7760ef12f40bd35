#pragma once

#include <cstdint>

namespace latorbit {

// Counter-based generator: every draw is a pure function of (key, counter),
// so parallel workers can consume disjoint streams without sharing state and
// results do not depend on scheduling.
class CounterRng {
public:
    CounterRng() = default;
    explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0)
        : key_(key), counter_(counter) {}

    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Derives a stream key for a (seed, stream index) pair.
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        return mix(seed ^ mix(stream + 0x711ad6a5fd57c2f3ULL));
    }

    std::uint64_t next_u64() {
        std::uint64_t z = key_ ^ mix(counter_++);
        return mix(z + 0x2545f4914f6cdd1dULL);
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    bool coin() { return (next_u64() & 1u) != 0; }

    // standard normal (Box-Muller; second value discarded for simplicity)
    double next_gaussian();

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace latorbit
