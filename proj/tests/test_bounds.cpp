#include <doctest.h>

#include <cmath>

#include "sumpi/bounds.hpp"

using namespace sumpi;

TEST_CASE("bound formula reference values") {
    CHECK(theorem_bound({2, 2, 1, 0, 0, 2, 2}) == 8);
    CHECK(theorem_bound({2, 2, 1, 1, 0, 2, 2}) == 15);
    CHECK(theorem_bound({2, 3, 1, 0, 0, 3, 1}) == 12);
    CHECK(cor1_bound(2, 2, 1, 2) == 8);
    CHECK(cor1_bound(3, 3, 2, 1) == 32);
}

TEST_CASE("formula identity over a parameter grid") {
    for (int d1 = 2; d1 <= 4; ++d1)
        for (int d2 = 2; d2 <= 4; ++d2)
            for (int k = 1; k <= 3; ++k)
                for (int t1 = 0; t1 <= 1; ++t1)
                    for (int t2 = 0; t2 <= 1; ++t2)
                        for (uint32_t p : {2u, 3u, 5u})
                            for (int side : {1, 2}) {
                                // Independent re-evaluation of the closed form.
                                int64_t ds = side == 1 ? d1 : d2;
                                int64_t expected =
                                    ((int64_t(d1) + d2 - 2) * (int64_t(k) * ds + 2) - 1) *
                                        ((int64_t(t1) + t2) * (int64_t(p) - 1) + 1) +
                                    1;
                                BoundParams bp{d1, d2, k, t1, t2, p, side};
                                CHECK(theorem_bound(bp) == expected);
                                if (t1 == 0 && t2 == 0)
                                    CHECK(theorem_bound(bp) == cor1_bound(d1, d2, k, side));
                            }
}

TEST_CASE("strict monotonicity in every active parameter") {
    for (int d1 = 2; d1 <= 4; ++d1)
        for (int d2 = 2; d2 <= 4; ++d2)
            for (int k = 1; k <= 3; ++k)
                for (int t1 = 0; t1 <= 1; ++t1)
                    for (int t2 = 0; t2 <= 1; ++t2)
                        for (uint32_t p : {2u, 3u})
                            for (int side : {1, 2}) {
                                BoundParams bp{d1, d2, k, t1, t2, p, side};
                                int64_t base = theorem_bound(bp);
                                auto bump = [&](auto f) {
                                    BoundParams b2 = bp;
                                    f(b2);
                                    return theorem_bound(b2);
                                };
                                CHECK(bump([](BoundParams& b) { b.d1++; }) > base);
                                CHECK(bump([](BoundParams& b) { b.d2++; }) > base);
                                CHECK(bump([](BoundParams& b) { b.k++; }) > base);
                                CHECK(bump([](BoundParams& b) { b.t1++; }) > base);
                                CHECK(bump([](BoundParams& b) { b.t2++; }) > base);
                                int64_t bigger_p = bump([](BoundParams& b) { b.p = 5; });
                                if (t1 + t2 > 0)
                                    CHECK(bigger_p > base);
                                else
                                    CHECK(bigger_p == base);
                            }
}

TEST_CASE("fgl comparison bound") {
    FglBound b = fgl_bound(2, 1);
    CHECK(b.a == doctest::Approx(8.0 * std::exp(1.0)).epsilon(1e-12));
    CHECK(b.a == doctest::Approx(21.7463).epsilon(1e-4));
    CHECK(b.log10_bound == doctest::Approx(b.a * std::log10(b.a)).epsilon(1e-12));
    CHECK(b.log10_bound == doctest::Approx(29.08).epsilon(2e-3));

    FglBound b3 = fgl_bound(3, 1);
    CHECK(b3.a == doctest::Approx(800.0 * std::exp(1.0)).epsilon(1e-12));

    CHECK_THROWS_AS(fgl_bound(1, 1), std::invalid_argument);
}

TEST_CASE("repetition threshold") {
    CHECK(repetition_threshold(1, 2) == 2);
    CHECK(repetition_threshold(0, 5) == 1);
    CHECK(repetition_threshold(2, 3) == 5);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(theorem_bound({0, 2, 1, 0, 0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(theorem_bound({2, 2, 0, 0, 0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(theorem_bound({2, 2, 1, -1, 0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(theorem_bound({2, 2, 1, 0, 0, 4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(theorem_bound({2, 2, 1, 0, 0, 2, 3}), std::invalid_argument);
}
