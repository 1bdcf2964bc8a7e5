#pragma once

#include <optional>
#include <string>

#include "sumpi/bounds.hpp"
#include "sumpi/subspace.hpp"
#include "sumpi/symmetric.hpp"

namespace sumpi {

/// Containment facts for (v1 v2)^k relative to a sum decomposition. When the
/// power lands in both summands, `side` picks the one giving the smaller
/// degree bound (ties go to side 1); with no degree information that means
/// side 1.
struct HypothesisResult {
    bool in1 = false;
    bool in2 = false;
    int t1 = 0;  // codimension of v1 in s1
    int t2 = 0;  // codimension of v2 in s2
    std::optional<int> side;
};

HypothesisResult check_hypothesis(const SumDecomposition& dec, int k,
                                  const Subspace& v1, const Subspace& v2,
                                  std::optional<int> d1 = std::nullopt,
                                  std::optional<int> d2 = std::nullopt);

enum class Tri { yes, no, budget, skipped };

const char* tri_name(Tri t);

struct TheoremVerdict {
    std::optional<int> d1, d2;           // minimal symmetric degrees of the summands
    std::optional<BoundParams> params;   // assembled once the hypothesis holds
    std::optional<int64_t> bound;        // the degree bound D
    bool hypothesis_ok = false;
    std::optional<int> side;
    int t1 = 0, t2 = 0;
    Tri identity = Tri::skipped;         // does s_D vanish on the ambient space
    std::optional<Witness> witness;
    uint64_t tuples_checked = 0;
    std::optional<int> d_star;           // minimal symmetric degree of the ambient
    bool d_star_budget = false;
    std::string note;
};

struct VerifyOptions {
    int d_max = 12;       // search cap for the summand degrees and d_star
    int threads = 1;
    bool want_d_star = false;
};

// Full pipeline: summand degrees, hypothesis, bound, exhaustive s_D check on
// the ambient space, optional ambient minimal degree. A failing identity
// with a holding hypothesis is a refutation finding; its witness is the
// deterministic lexicographic minimum.
TheoremVerdict verify_theorem_instance(const SumDecomposition& dec, int k,
                                       const Subspace& v1, const Subspace& v2,
                                       Budget& budget,
                                       const VerifyOptions& opts = {});

}  // namespace sumpi
