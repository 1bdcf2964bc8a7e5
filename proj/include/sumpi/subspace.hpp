#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sumpi/algebra.hpp"

namespace sumpi {

/// Linear subspace of an Algebra, stored as a reduced-row-echelon basis
/// matrix. The form is canonical: equal subspaces have identical rows, so
/// equality is row-by-row comparison.
class Subspace {
public:
    static Subspace span(AlgebraPtr a, const std::vector<Element>& vectors);
    static Subspace zero(AlgebraPtr a);
    static Subspace full(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return alg_; }
    int dim() const { return int(rows_.size()); }
    bool is_zero() const { return rows_.empty(); }
    const std::vector<Element>& rows() const { return rows_; }

    bool contains(const Element& x) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& other) const;

private:
    Subspace(AlgebraPtr a, std::vector<Element> rows)
        : alg_(std::move(a)), rows_(std::move(rows)) {}

    AlgebraPtr alg_;
    std::vector<Element> rows_;  // reduced echelon, pivots strictly increasing
};

Subspace subspace_sum(const Subspace& s, const Subspace& t);

// span{ v*w : v in rows(s), w in rows(t) }; exact by bilinearity.
Subspace subspace_product(const Subspace& s, const Subspace& t);

// (s1*s2)^k computed as W_1 = s1*s2, W_{j+1} = W_j * W_1. k >= 1: with no
// unity assumed, the empty product is undefined.
Subspace product_power(const Subspace& s1, const Subspace& s2, int k);

// dim(ambient) - dim(v); throws if v is not contained in ambient (the
// message names the first offending row).
int codimension(const Subspace& ambient, const Subspace& v);

// First row pair (i,j) of s whose product falls outside s, with the product.
struct ClosureWitness {
    std::array<int, 2> rows;
    Element value;
};
std::optional<ClosureWitness> closure_witness(const Subspace& s);
bool is_subalgebra(const Subspace& s);

// Smallest m <= cap with s^m = 0, where s^1 = s and s^{j+1} = s^j * s.
// Requires s closed under multiplication.
std::optional<int> nilpotency_index(const Subspace& s, int cap);

/// A decomposition A = s1 + s2 into two subalgebras spanning the ambient
/// algebra.
struct SumDecomposition {
    AlgebraPtr algebra;
    Subspace s1;
    Subspace s2;
};

struct DecompositionCheck {
    bool ok = false;
    // "", "not spanning", "s1 not closed" or "s2 not closed".
    std::string error;
    std::optional<ClosureWitness> witness;
    std::optional<SumDecomposition> decomposition;
};

DecompositionCheck check_sum_decomposition(const AlgebraPtr& a,
                                           const Subspace& s1,
                                           const Subspace& s2);

struct Rng;
// Random F_p-combination of the rows of s.
Element random_element(const Subspace& s, Rng& rng);

}  // namespace sumpi
