#include "sumpi/fp.hpp"

#include <stdexcept>
#include <string>

namespace sumpi {

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (uint64_t f = 5; f * f <= p; f += 6) {
        if (p % f == 0 || p % (f + 2) == 0) return false;
    }
    return true;
}

Fp::Fp(uint32_t prime) : p(prime) {
    if (p > 0x7fffffffu)
        throw std::invalid_argument("modulus exceeds 2^31 - 1: " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p;
    uint32_t b = a % p;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint32_t Fp::inv(uint32_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return pow(a, p - 2);
}

}  // namespace sumpi
