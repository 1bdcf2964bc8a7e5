#pragma once

#include <map>
#include <string>

#include "sumpi/subspace.hpp"

namespace sumpi {

/// An algebra plus a set of named subspaces, as stored in a `.alg` file.
/// Subspace names are unique, nonempty, and restricted to [A-Za-z0-9_].
struct AlgebraFile {
    AlgebraPtr algebra;
    std::map<std::string, Subspace> subspaces;
    // Computed by the parser and the constructors; an inconsistency is a
    // warning flag rather than a hard error, so that negative fixtures can
    // be stored.
    bool associative = true;

    const Subspace& subspace(const std::string& name) const;

    bool operator==(const AlgebraFile& other) const {
        return *algebra == *other.algebra && subspaces == other.subspaces &&
               associative == other.associative;
    }
};

bool valid_identifier(const std::string& s);

namespace zoo {

// Upper triangular n x n matrices over F_p, basis {e_ii} then {e_ij : i<j};
// ships subspaces "D" (diagonal), "N" (strictly upper) and "full". n in 1..6.
AlgebraFile upper_triangular(int n, uint32_t p);

// Strictly upper triangular n x n matrices, n in 2..6.
AlgebraFile strictly_upper(int n, uint32_t p);

// Diagonal n x n matrices (n orthogonal idempotents), n in 1..16.
AlgebraFile diagonal(int n, uint32_t p);

// Full n x n matrix algebra, basis in row-major order, n in 1..4.
AlgebraFile full_matrix(int n, uint32_t p);

// F_p[x]/(x^m) without unity: basis x, x^2, ..., x^{m-1}. m in 2..8.
// Commutative, nilpotent of index m, and free of idempotents.
AlgebraFile truncated_poly(int m, uint32_t p);

// Block-diagonal sum with zero cross products. Operand subspaces are carried
// over with "a1_"/"a2_" prefixes; basis labels get "a_"/"b_" prefixes.
AlgebraFile direct_sum(const AlgebraFile& f1, const AlgebraFile& f2);

}  // namespace zoo

}  // namespace sumpi
