#include <doctest.h>

#include <bit>
#include <set>

#include "sumpi/delta.hpp"
#include "sumpi/symmetric.hpp"
#include "sumpi/zoo.hpp"
#include "test_util.hpp"

using namespace sumpi;

namespace {

SumDecomposition dn_decomposition(const AlgebraFile& u) {
    DecompositionCheck c =
        check_sum_decomposition(u.algebra, u.subspace("D"), u.subspace("N"));
    REQUIRE(c.ok);
    return *c.decomposition;
}

// Independent oracle: patterns are in bijection with binary words of r b's
// and s c's via maximal runs.
std::set<std::vector<int>> patterns_from_words(int r, int s) {
    std::set<std::vector<int>> out;
    const int len = r + s;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        if (int(std::popcount(mask)) != s) continue;  // bit 1 = 'c'
        std::vector<int> parts;
        int pos = 0;
        while (pos < len) {
            int beta = 0, gamma = 0;
            while (pos < len && !(mask >> pos & 1)) ++beta, ++pos;
            while (pos < len && (mask >> pos & 1)) ++gamma, ++pos;
            parts.push_back(beta);
            parts.push_back(gamma);
        }
        out.insert(parts);
    }
    return out;
}

uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
    return r;
}

}  // namespace

TEST_CASE("pattern counts match binomial coefficients") {
    for (int total = 1; total <= 10; ++total)
        for (int r = 0; r <= total; ++r) {
            int s = total - r;
            CHECK(enumerate_delta(r, s).size() == binom(total, r));
        }
}

TEST_CASE("pattern families match the run-length oracle") {
    for (int total = 1; total <= 8; ++total)
        for (int r = 0; r <= total; ++r) {
            int s = total - r;
            std::set<std::vector<int>> got;
            for (const Delta& d : enumerate_delta(r, s)) {
                CHECK(d.r() == r);
                CHECK(d.s() == s);
                got.insert(d.parts);
            }
            CHECK(got == patterns_from_words(r, s));
        }
}

TEST_CASE("small pattern families, explicitly") {
    std::vector<Delta> d11 = enumerate_delta(1, 1);
    REQUIRE(d11.size() == 2);
    CHECK(d11[0].parts == std::vector<int>{1, 1});
    CHECK(d11[1].parts == std::vector<int>{0, 1, 1, 0});

    std::vector<Delta> d21 = enumerate_delta(2, 1);
    REQUIRE(d21.size() == 3);
    CHECK(d21[0].parts == std::vector<int>{2, 1});
    CHECK(d21[1].parts == std::vector<int>{0, 1, 2, 0});
    CHECK(d21[2].parts == std::vector<int>{1, 1, 1, 0});

    std::vector<Delta> d0s = enumerate_delta(0, 4);
    REQUIRE(d0s.size() == 1);
    CHECK(d0s[0].parts == std::vector<int>{0, 4});

    CHECK_THROWS_AS(enumerate_delta(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_delta(7, 6), std::invalid_argument);
}

TEST_CASE("ordering is by block count, then lexicographic") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 3}}) {
        std::vector<Delta> all = enumerate_delta(r, s);
        for (size_t i = 1; i < all.size(); ++i) {
            const auto &a = all[i - 1].parts, &b = all[i].parts;
            CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
        }
    }
}

TEST_CASE("single-block evaluations") {
    AlgebraFile u = zoo::upper_triangular(2, 2);
    SumDecomposition dec = dn_decomposition(u);
    Element e11 = u.algebra->basis_element(0), e12 = u.algebra->basis_element(2);
    std::vector<Element> b{e11}, c{e12};

    Delta bc{{1, 1}};
    CHECK(eval_s_delta(dec, bc, b, c) == u.algebra->multiply(e11, e12));

    Delta cb{{0, 1, 1, 0}};
    CHECK(eval_s_delta(dec, cb, b, c) == u.algebra->multiply(e12, e11));

    // The two patterns of Delta_{1,1} add up to s_2(b, c).
    std::vector<Element> both{e11, e12};
    CHECK(u.algebra->add(eval_s_delta(dec, bc, b, c), eval_s_delta(dec, cb, b, c)) ==
          eval_symmetric(*u.algebra, both));
}

TEST_CASE("membership preconditions are enforced") {
    AlgebraFile u = zoo::upper_triangular(2, 2);
    SumDecomposition dec = dn_decomposition(u);
    std::vector<Element> bad{u.algebra->basis_element(2)};  // e12 is not in D
    std::vector<Element> c{u.algebra->basis_element(2)};
    Delta d{{1, 1}};
    CHECK_THROWS_AS(eval_s_delta(dec, d, bad, c), std::invalid_argument);
}

TEST_CASE("decomposition identity on all small basis tuples") {
    for (const AlgebraFile& u : {zoo::upper_triangular(2, 2), zoo::upper_triangular(3, 3)}) {
        SumDecomposition dec = dn_decomposition(u);
        const int dim1 = dec.s1.dim(), dim2 = dec.s2.dim();
        for (int r = 0; r <= 4; ++r)
            for (int s = 0; s <= 4 - r; ++s) {
                if (r + s < 1) continue;
                uint64_t total = 1;
                for (int i = 0; i < r; ++i) total *= uint64_t(dim1);
                for (int i = 0; i < s; ++i) total *= uint64_t(dim2);
                for (uint64_t t = 0; t < total; ++t) {
                    uint64_t rest = t;
                    std::vector<Element> b, c;
                    for (int i = 0; i < r; ++i) {
                        b.push_back(dec.s1.rows()[size_t(rest % uint64_t(dim1))]);
                        rest /= uint64_t(dim1);
                    }
                    for (int i = 0; i < s; ++i) {
                        c.push_back(dec.s2.rows()[size_t(rest % uint64_t(dim2))]);
                        rest /= uint64_t(dim2);
                    }
                    CHECK(verify_decomposition(dec, b, c));
                }
            }
    }
}

TEST_CASE("decomposition identity on random tuples up to degree 8") {
    Rng rng(55);
    for (const AlgebraFile& u : {zoo::upper_triangular(2, 2), zoo::upper_triangular(3, 3)}) {
        SumDecomposition dec = dn_decomposition(u);
        for (int total = 5; total <= 8; ++total)
            for (int r = 0; r <= total; ++r) {
                int s = total - r;
                Budget budget(uint64_t(1) << 40);
                std::vector<Element> b, c;
                for (int i = 0; i < r; ++i) b.push_back(random_element(dec.s1, rng));
                for (int i = 0; i < s; ++i) c.push_back(random_element(dec.s2, rng));
                CHECK(verify_decomposition(dec, b, c, budget));
            }
    }
}

TEST_CASE("oversize blocks force the pattern sum to vanish") {
    for (const AlgebraFile& u : {zoo::upper_triangular(2, 2), zoo::upper_triangular(2, 3)}) {
        SumDecomposition dec = dn_decomposition(u);
        Budget budget(uint64_t(1) << 40);
        MinDegreeResult m1 = min_symmetric_degree(dec.s1, 8);
        MinDegreeResult m2 = min_symmetric_degree(dec.s2, 8);
        REQUIRE(m1.degree.has_value());
        REQUIRE(m2.degree.has_value());
        for (int total = 2; total <= 5; ++total)
            for (int r = 0; r <= total; ++r) {
                for (const Delta& d : enumerate_delta(r, total - r)) {
                    if (!d.exceeds(*m1.degree, *m2.degree)) continue;
                    CHECK(s_delta_vanishing(dec, *m1.degree, *m2.degree, d, 25, 99, budget));
                }
            }
        Delta small{{1, 1}};
        CHECK_THROWS_AS(s_delta_vanishing(dec, *m1.degree, *m2.degree, small, 5, 1, budget),
                        std::invalid_argument);
    }
}
