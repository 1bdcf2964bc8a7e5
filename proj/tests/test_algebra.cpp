#include <doctest.h>

#include "sumpi/zoo.hpp"
#include "test_util.hpp"

using namespace sumpi;

namespace {

// U(2,F2) basis order: e11, e22, e12.
AlgebraPtr u2f2() { return zoo::upper_triangular(2, 2).algebra; }

}  // namespace

TEST_CASE("structure-constant products of matrix units") {
    auto a = u2f2();
    Element e11 = a->basis_element(0), e22 = a->basis_element(1),
            e12 = a->basis_element(2);
    CHECK(a->multiply(e11, e12) == e12);
    CHECK(a->multiply(e12, e11) == a->zero());
    CHECK(a->multiply(e12, e22) == e12);
    CHECK(a->multiply(e11, a->zero()) == a->zero());
    CHECK(a->multiply(e12, e12) == a->zero());
}

TEST_CASE("element construction validates dimension and range") {
    auto a = u2f2();
    CHECK_THROWS_AS(a->element({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(a->element({2, 0, 0}), std::invalid_argument);
    Element other{{0, 1}};
    CHECK_THROWS_AS(a->multiply(a->zero(), other), std::invalid_argument);
}

TEST_CASE("associativity of the zoo algebras") {
    CHECK(zoo::upper_triangular(2, 2).algebra->is_associative());
    CHECK(zoo::upper_triangular(3, 3).algebra->is_associative());
    CHECK(zoo::full_matrix(2, 2).algebra->is_associative());
    CHECK(zoo::truncated_poly(4, 5).algebra->is_associative());

    Algebra one("scalar", 3, 1);
    one.set_sc(0, 0, 0, 1);
    CHECK(one.is_associative());
}

TEST_CASE("associativity violation reports the lexicographically first triple") {
    // Flip e12*e12 = e11 in U(2,F2): then (e12 e11) e12 = 0 but
    // e12 (e11 e12) = e11.
    Algebra a("broken", 2, 3);
    a.set_sc(0, 0, 0, 1);  // e11 e11 = e11
    a.set_sc(1, 1, 1, 1);  // e22 e22 = e22
    a.set_sc(0, 2, 2, 1);  // e11 e12 = e12
    a.set_sc(2, 1, 2, 1);  // e12 e22 = e12
    a.set_sc(2, 2, 0, 1);  // flipped entry
    auto w = a.associativity_witness();
    REQUIRE(w.has_value());
    CHECK(*w == std::array<int, 3>{2, 0, 2});
}

TEST_CASE("bilinearity on random triples across the zoo") {
    for (const AlgebraFile& f :
         {zoo::upper_triangular(2, 2), zoo::upper_triangular(3, 3),
          zoo::full_matrix(2, 2), zoo::truncated_poly(4, 5),
          zoo::direct_sum(zoo::diagonal(2, 2), zoo::strictly_upper(2, 2))}) {
        const Algebra& a = *f.algebra;
        Rng rng(7);
        for (int t = 0; t < 120; ++t) {
            Element x = test::random_full_element(a, rng);
            Element x2 = test::random_full_element(a, rng);
            Element y = test::random_full_element(a, rng);
            CHECK(a.multiply(a.add(x, x2), y) ==
                  a.add(a.multiply(x, y), a.multiply(x2, y)));
            CHECK(a.multiply(y, a.add(x, x2)) ==
                  a.add(a.multiply(y, x), a.multiply(y, x2)));
            uint32_t lam = rng.below(a.p());
            CHECK(a.multiply(a.scale(lam, x), y) == a.scale(lam, a.multiply(x, y)));
        }
    }
}

TEST_CASE("format_element uses labels") {
    auto a = u2f2();
    CHECK(a->format_element(a->zero()) == "0");
    CHECK(a->format_element(a->basis_element(2)) == "e12");
    CHECK(a->format_element(a->add(a->basis_element(0), a->basis_element(2))) ==
          "e11 + e12");
}

TEST_CASE("dimension and modulus caps") {
    CHECK_THROWS_AS(Algebra("x", 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Algebra("x", 2, 65), std::invalid_argument);
    CHECK_NOTHROW(Algebra("x", 2, 64));
}
