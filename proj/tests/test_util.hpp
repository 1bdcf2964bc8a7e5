#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sumpi/rng.hpp"
#include "sumpi/subspace.hpp"
#include "sumpi/zoo.hpp"

namespace sumpi::test {

// Independent oracle for s_d: the literal d!-permutation sum, multiplied
// left to right. Deliberately kept naive; the subset-DP evaluator is
// checked against this.
inline Element naive_symmetric(const Algebra& a, const std::vector<Element>& args) {
    std::vector<int> perm(args.size());
    std::iota(perm.begin(), perm.end(), 0);
    Element acc = a.zero();
    do {
        Element prod = args[size_t(perm[0])];
        for (size_t i = 1; i < perm.size(); ++i)
            prod = a.multiply(prod, args[size_t(perm[i])]);
        acc = a.add(acc, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

inline Element random_full_element(const Algebra& a, Rng& rng) {
    Element x = a.zero();
    for (auto& c : x.coords) c = rng.below(a.p());
    return x;
}

inline std::vector<Element> random_tuple(const Algebra& a, int d, Rng& rng) {
    std::vector<Element> args;
    args.reserve(size_t(d));
    for (int i = 0; i < d; ++i) args.push_back(random_full_element(a, rng));
    return args;
}

}  // namespace sumpi::test
