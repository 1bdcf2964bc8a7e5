#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumpi/algebra.hpp"

namespace sumpi {

/// One monomial coeff * x_{perm[0]+1} x_{perm[1]+1} ... of a multilinear
/// polynomial; perm is a 0-based permutation of {0..d-1}.
struct MonomialTerm {
    std::vector<int> perm;
    int64_t coeff;

    bool operator==(const MonomialTerm&) const = default;
};

/// Degree-d multilinear polynomial with integer coefficients, stored as a
/// list of (permutation, coefficient) pairs with distinct permutations and
/// nonzero coefficients. Coefficients are reduced mod p at evaluation time.
class MultilinearPoly {
public:
    MultilinearPoly(int degree, std::vector<MonomialTerm> terms);

    int degree() const { return degree_; }
    const std::vector<MonomialTerm>& terms() const { return terms_; }

    bool operator==(const MultilinearPoly&) const = default;

private:
    int degree_;
    std::vector<MonomialTerm> terms_;  // sorted by permutation
};

// Materialization cap for the explicit d!-term list. Higher degrees are
// evaluated implicitly via eval_symmetric.
inline constexpr int kMaxMaterializedSymDegree = 8;

// s_d = sum over all permutations of x_{s(1)} ... x_{s(d)}, d <= 8.
MultilinearPoly sym_poly(int d);

// [x1,x2] = x1 x2 - x2 x1.
MultilinearPoly commutator_poly();

// [x1,x2][x3,x4].
MultilinearPoly commutator_square_poly();

// [x1,x2][x3,x4]...[x_{2n-1},x_{2n}], 2n <= 8.
MultilinearPoly commutator_product_poly(int n);

// sum_terms coeff * args[perm[0]] * ... * args[perm[d-1]], multiplied left
// to right.
Element eval_poly(const Algebra& a, const MultilinearPoly& f,
                  std::span<const Element> args);

}  // namespace sumpi
