#include <doctest.h>

#include "sumpi/poly.hpp"
#include "sumpi/symmetric.hpp"
#include "sumpi/zoo.hpp"
#include "test_util.hpp"

using namespace sumpi;

TEST_CASE("sym_poly term lists") {
    MultilinearPoly s1 = sym_poly(1);
    CHECK(s1.degree() == 1);
    REQUIRE(s1.terms().size() == 1);
    CHECK(s1.terms()[0].coeff == 1);

    MultilinearPoly s2 = sym_poly(2);
    REQUIRE(s2.terms().size() == 2);
    CHECK(s2.terms()[0].perm == std::vector<int>{0, 1});
    CHECK(s2.terms()[1].perm == std::vector<int>{1, 0});
    CHECK(s2.terms()[0].coeff == 1);
    CHECK(s2.terms()[1].coeff == 1);

    MultilinearPoly s3 = sym_poly(3);
    CHECK(s3.terms().size() == 6);
    for (const MonomialTerm& t : s3.terms()) CHECK(t.coeff == 1);

    CHECK_THROWS_AS(sym_poly(9), std::invalid_argument);
    CHECK_THROWS_AS(sym_poly(0), std::invalid_argument);
}

TEST_CASE("commutator polynomials") {
    MultilinearPoly c = commutator_poly();
    CHECK(c.degree() == 2);
    REQUIRE(c.terms().size() == 2);
    CHECK(c.terms()[0].perm == std::vector<int>{0, 1});
    CHECK(c.terms()[0].coeff == 1);
    CHECK(c.terms()[1].perm == std::vector<int>{1, 0});
    CHECK(c.terms()[1].coeff == -1);

    MultilinearPoly c2 = commutator_square_poly();
    CHECK(c2.degree() == 4);
    CHECK(c2.terms().size() == 4);
    CHECK(c2 == commutator_product_poly(2));

    CHECK(commutator_product_poly(4).terms().size() == 16);
    CHECK_THROWS_AS(commutator_product_poly(5), std::invalid_argument);
}

TEST_CASE("term validation") {
    CHECK_THROWS_AS(MultilinearPoly(2, {{{0, 0}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MultilinearPoly(2, {{{0, 1}, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MultilinearPoly(2, {{{0, 1}, 1}, {{0, 1}, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MultilinearPoly(2, {{{0}, 1}}), std::invalid_argument);
}

TEST_CASE("eval_poly on the running examples") {
    AlgebraFile u = zoo::upper_triangular(2, 2);
    const Algebra& a = *u.algebra;
    Element e11 = a.basis_element(0), e12 = a.basis_element(2);

    std::vector<Element> args{e11, e12};
    CHECK(eval_poly(a, sym_poly(2), args) == e12);

    // A commutator of equal arguments vanishes.
    std::vector<Element> same{e12, e12};
    CHECK(eval_poly(a, commutator_poly(), same) == a.zero());

    // [e11,e12][e11,e12] = e12 * e12 = 0.
    std::vector<Element> four{e11, e12, e11, e12};
    CHECK(eval_poly(a, commutator_square_poly(), four) == a.zero());

    CHECK_THROWS_AS(eval_poly(a, sym_poly(2), std::span<const Element>(same.data(), 1)),
                    std::invalid_argument);
}

TEST_CASE("commutator square is nonzero on the full matrix algebra") {
    AlgebraFile mfile = zoo::full_matrix(2, 2);
    const Algebra& m = *mfile.algebra;
    // Row-major basis: e11, e12, e21, e22.
    Element e11 = m.basis_element(0), e12 = m.basis_element(1),
            e21 = m.basis_element(2);
    std::vector<Element> args{e11, e12, e21, e11};
    // [e11,e12] = e12, [e21,e11] = e21, e12*e21 = e11.
    CHECK(eval_poly(m, commutator_square_poly(), args) == e11);
}

TEST_CASE("sym_poly evaluation agrees with the symmetric evaluator") {
    auto a = zoo::upper_triangular(2, 3).algebra;
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        std::vector<Element> args = test::random_tuple(*a, 3, rng);
        CHECK(eval_poly(*a, sym_poly(3), args) == eval_symmetric(*a, args));
    }
}
