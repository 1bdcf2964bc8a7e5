#include "sumpi/budget.hpp"

#include <limits>
#include <numeric>

namespace sumpi {

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
    if (a > kMax / b) return kMax;
    return a * b;
}

uint64_t sat_pow(uint64_t base, unsigned exp) {
    uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

uint64_t binom_sat(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
    uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // r = r * (n - k + i) / i, exact at every step.
        uint64_t num = n - k + i;
        uint64_t g = std::gcd(r, uint64_t(i));
        uint64_t rr = r / g;
        uint64_t ii = uint64_t(i) / g;
        uint64_t g2 = std::gcd(num, ii);
        num /= g2;
        ii /= g2;
        // After the two gcd passes ii must be 1 since C(n,k) is integral.
        if (rr > kMax / num) return kMax;
        r = rr * num;
        (void)ii;
    }
    return r;
}

}  // namespace sumpi
