#include <doctest.h>

#include "sumpi/symmetric.hpp"
#include "sumpi/zoo.hpp"
#include "test_util.hpp"

using namespace sumpi;

TEST_CASE("every zoo constructor yields an associative algebra") {
    CHECK(zoo::upper_triangular(2, 2).associative);
    CHECK(zoo::upper_triangular(6, 7).associative);
    CHECK(zoo::strictly_upper(4, 3).associative);
    CHECK(zoo::diagonal(5, 5).associative);
    CHECK(zoo::full_matrix(3, 2).associative);
    CHECK(zoo::truncated_poly(8, 3).associative);
    CHECK(zoo::direct_sum(zoo::diagonal(2, 2), zoo::strictly_upper(2, 2)).associative);
}

TEST_CASE("upper triangular ships the diagonal/strict decomposition") {
    for (int n : {2, 3, 4}) {
        AlgebraFile u = zoo::upper_triangular(n, 2);
        CHECK(u.algebra->dim() == n * (n + 1) / 2);
        CHECK(check_sum_decomposition(u.algebra, u.subspace("D"), u.subspace("N")).ok);

        // N is an ideal.
        const Subspace& full = u.subspace("full");
        const Subspace& nsub = u.subspace("N");
        CHECK(nsub.contains(subspace_product(full, nsub)));
        CHECK(nsub.contains(subspace_product(nsub, full)));

        CHECK(check_identity(commutator_poly(), u.subspace("D")).outcome ==
              Outcome::holds);
        CHECK(nilpotency_index(nsub, 10) == n);
    }
}

TEST_CASE("truncated polynomial algebras") {
    AlgebraFile t = zoo::truncated_poly(3, 5);
    const Algebra& a = *t.algebra;
    CHECK(a.dim() == 2);
    Element x = a.basis_element(0), x2 = a.basis_element(1);
    CHECK(a.multiply(x, x) == x2);
    CHECK(a.multiply(x2, x) == a.zero());
    CHECK(check_identity(commutator_poly(), t.subspace("full")).outcome ==
          Outcome::holds);
    // Nilpotent, hence no unity anywhere in the algebra.
    CHECK(nilpotency_index(t.subspace("full"), 10) == 3);
}

TEST_CASE("direct sums have zero cross products and carry prefixed subspaces") {
    AlgebraFile d = zoo::diagonal(2, 2);
    AlgebraFile n = zoo::strictly_upper(2, 2);
    AlgebraFile sum = zoo::direct_sum(d, n);
    const Algebra& a = *sum.algebra;
    CHECK(a.dim() == 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 3; ++j) {
            CHECK(a.multiply(a.basis_element(i), a.basis_element(j)) == a.zero());
            CHECK(a.multiply(a.basis_element(j), a.basis_element(i)) == a.zero());
        }
    CHECK(sum.subspaces.count("a1_full") == 1);
    CHECK(sum.subspaces.count("a2_full") == 1);
    CHECK(sum.subspace("a1_full").dim() == 2);
    CHECK(sum.subspace("a2_full").dim() == 1);
    CHECK(sum.subspace("full").dim() == 3);

    CHECK_THROWS_AS(zoo::direct_sum(zoo::diagonal(2, 2), zoo::diagonal(2, 3)),
                    std::invalid_argument);
}

TEST_CASE("full matrix algebra is not a sum of two commutative pieces") {
    AlgebraFile m = zoo::full_matrix(2, 2);
    IdentityReport rep = check_identity(commutator_square_poly(), m.subspace("full"));
    CHECK(rep.outcome == Outcome::fails);
    REQUIRE(rep.witness.has_value());
    // Row-major basis: lexicographically first witness (e11, e12, e11, e21).
    CHECK(rep.witness->indices == std::vector<int>{0, 1, 0, 2});
    CHECK(rep.witness->value == m.algebra->basis_element(0));
}

TEST_CASE("parameter ranges are validated") {
    CHECK_THROWS_AS(zoo::upper_triangular(7, 2), std::invalid_argument);
    CHECK_THROWS_AS(zoo::upper_triangular(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(zoo::strictly_upper(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(zoo::full_matrix(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(zoo::truncated_poly(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(zoo::truncated_poly(1, 2), std::invalid_argument);
}
