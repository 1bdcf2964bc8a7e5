#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumpi/budget.hpp"
#include "sumpi/subspace.hpp"

namespace sumpi {

/// Interleaving pattern (beta_1, gamma_1, ..., beta_m, gamma_m) describing
/// how r left-summand factors and s right-summand factors group into
/// alternating blocks inside a degree-(r+s) monomial. Constraints: m >= 1,
/// beta_1 >= 0, gamma_m >= 0, every interior part >= 1, and the parts sum
/// to r and s respectively.
struct Delta {
    std::vector<int> parts;

    int blocks() const { return int(parts.size()) / 2; }
    int beta(int i) const { return parts[size_t(2 * i)]; }
    int gamma(int i) const { return parts[size_t(2 * i + 1)]; }
    int r() const;
    int s() const;
    // Some beta_i >= d1 or gamma_i >= d2.
    bool exceeds(int d1, int d2) const;

    bool operator==(const Delta&) const = default;
};

// All patterns for given (r, s), ordered by block count then by parts
// lexicographically. The family is in bijection with binary words of r b's
// and s c's (maximal runs become parts), so its size is C(r+s, r).
// Requires 1 <= r+s <= 12.
std::vector<Delta> enumerate_delta(int r, int s);

// s_delta(b, c): the double sum over permutations of b and of c of the
// interleaved block products. Empty blocks (beta_1 = 0 or gamma_m = 0)
// contribute no factor: the algebra has no unity. Requires r, s <= 7 and
// b/c inside the decomposition's summands; costs r! s! (r+s-1) element
// multiplications, charged to the budget.
Element eval_s_delta(const SumDecomposition& dec, const Delta& delta,
                     std::span<const Element> b, std::span<const Element> c,
                     Budget& budget);
Element eval_s_delta(const SumDecomposition& dec, const Delta& delta,
                     std::span<const Element> b, std::span<const Element> c);

// Checks s_{r+s}(b, c) == sum over all delta in Delta_{r,s} of s_delta,
// both sides computed independently. Requires r+s <= 8.
bool verify_decomposition(const SumDecomposition& dec,
                          std::span<const Element> b,
                          std::span<const Element> c, Budget& budget);
bool verify_decomposition(const SumDecomposition& dec,
                          std::span<const Element> b,
                          std::span<const Element> c);

// For a pattern with some beta_i >= d1 or gamma_i >= d2 (d_i being verified
// symmetric degrees of the summands), s_delta must vanish identically.
// Evaluates it on all basis-row tuples plus `trials` random tuples from the
// summands; true iff every evaluation is zero. Throws std::invalid_argument
// when the pattern has no oversize part.
bool s_delta_vanishing(const SumDecomposition& dec, int d1, int d2,
                       const Delta& delta, int trials, uint64_t seed,
                       Budget& budget);

}  // namespace sumpi
