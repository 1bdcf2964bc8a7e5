#pragma once

#include <cstdint>

namespace sumpi {

// Deterministic primality test for p <= 2^31 - 1 (trial division).
bool is_prime(uint64_t p);

/// Arithmetic in the prime field F_p. Residues are uint32_t values in [0, p).
/// The modulus is carried by the context (Fp or the owning Algebra), not by
/// the individual residues.
struct Fp {
    uint32_t p;

    // Validates that p is prime and p <= 2^31 - 1.
    explicit Fp(uint32_t prime);

    uint32_t add(uint32_t a, uint32_t b) const {
        uint64_t s = uint64_t(a) + b;
        return s >= p ? uint32_t(s - p) : uint32_t(s);
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : uint32_t(uint64_t(a) + p - b);
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return uint32_t(uint64_t(a) * b % p);
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }

    uint32_t pow(uint32_t a, uint64_t e) const;

    // Multiplicative inverse; a must be nonzero.
    uint32_t inv(uint32_t a) const;

    // Reduce a signed integer to its residue in [0, p).
    uint32_t reduce(int64_t v) const {
        int64_t r = v % int64_t(p);
        if (r < 0) r += p;
        return uint32_t(r);
    }
};

}  // namespace sumpi
