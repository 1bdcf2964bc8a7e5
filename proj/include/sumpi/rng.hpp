#pragma once

#include <cstdint>

namespace sumpi {

/// splitmix64 generator. Used wherever the tool samples random tuples, so
/// that reports are reproducible across platforms and standard libraries.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint32_t below(uint32_t n) { return n == 0 ? 0 : uint32_t(next() % n); }
};

}  // namespace sumpi
