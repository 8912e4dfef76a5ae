#ifndef FPCAT_TEST_RNG_HPP
#define FPCAT_TEST_RNG_HPP

#include <cstdint>

// deterministic splitmix64 generator so expected values stay frozen
struct test_rng {
    uint64_t state;
    explicit test_rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

#endif
