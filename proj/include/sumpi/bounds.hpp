#pragma once

#include <cstdint>

namespace sumpi {

/// Inputs of the sum-decomposition degree bound: the two summands satisfy
/// symmetric identities of degrees d1 and d2, v_i has codimension t_i in
/// summand i, (v1 v2)^k lands in summand `side`, and p is the field
/// characteristic.
struct BoundParams {
    int d1 = 1;
    int d2 = 1;
    int k = 1;
    int t1 = 0;
    int t2 = 0;
    uint32_t p = 2;
    int side = 1;
};

// D = ((d1+d2-2)(k*d_side + 2) - 1) * ((t1+t2)(p-1) + 1) + 1.
int64_t theorem_bound(const BoundParams& bp);

// Zero-codimension case: D = (d1+d2-2)(k*d_side + 2).
int64_t cor1_bound(int d1, int d2, int k, int side);

/// Classical comparison bound D' <= a^a + 1 with
/// a = 8e(kd(d-1)-1)^2 (d-1)^2; a^a is reported via its base-10 logarithm
/// because it overflows any fixed-width integer already for d = 2.
struct FglBound {
    double a;
    double log10_bound;  // a * log10(a)
};
FglBound fgl_bound(int d, int k);

// Repetition threshold t(p-1) + 1: once that many arguments come from a
// t-dimensional complement, s_D vanishes for multiplicity reasons.
int64_t repetition_threshold(int t, uint32_t p);

}  // namespace sumpi
