#include "sumpi/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "sumpi/fp.hpp"

namespace sumpi {

namespace {

void check_common(int d1, int d2, int k, int side) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be >= 1");
    if (k < 1) throw std::invalid_argument("exponent k must be >= 1");
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
}

}  // namespace

int64_t theorem_bound(const BoundParams& bp) {
    check_common(bp.d1, bp.d2, bp.k, bp.side);
    if (bp.t1 < 0 || bp.t2 < 0)
        throw std::invalid_argument("codimensions must be >= 0");
    if (!is_prime(bp.p)) throw std::invalid_argument("p must be prime");
    const int64_t d_side = bp.side == 1 ? bp.d1 : bp.d2;
    const int64_t core = int64_t(bp.d1 + bp.d2 - 2) * (int64_t(bp.k) * d_side + 2);
    const int64_t rep = int64_t(bp.t1 + bp.t2) * (int64_t(bp.p) - 1) + 1;
    return (core - 1) * rep + 1;
}

int64_t cor1_bound(int d1, int d2, int k, int side) {
    check_common(d1, d2, k, side);
    const int64_t d_side = side == 1 ? d1 : d2;
    return int64_t(d1 + d2 - 2) * (int64_t(k) * d_side + 2);
}

FglBound fgl_bound(int d, int k) {
    if (d < 2) throw std::invalid_argument("fgl_bound: d must be >= 2");
    if (k < 1) throw std::invalid_argument("fgl_bound: k must be >= 1");
    const double kd = double(k) * d * (d - 1);
    if (kd < 2) throw std::invalid_argument("fgl_bound: k*d*(d-1) must be >= 2");
    const double a = 8.0 * std::exp(1.0) * std::pow(kd - 1.0, 2.0) *
                     std::pow(double(d - 1), 2.0);
    return {a, a * std::log10(a)};
}

int64_t repetition_threshold(int t, uint32_t p) {
    if (t < 0) throw std::invalid_argument("repetition_threshold: t must be >= 0");
    if (!is_prime(p)) throw std::invalid_argument("repetition_threshold: p must be prime");
    return int64_t(t) * (int64_t(p) - 1) + 1;
}

}  // namespace sumpi
