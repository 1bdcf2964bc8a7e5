#include "sumpi/theorem.hpp"

#include <stdexcept>

namespace sumpi {

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        case Tri::budget: return "budget";
        case Tri::skipped: return "skipped";
    }
    return "?";
}

HypothesisResult check_hypothesis(const SumDecomposition& dec, int k,
                                  const Subspace& v1, const Subspace& v2,
                                  std::optional<int> d1, std::optional<int> d2) {
    if (!dec.s1.contains(v1))
        throw std::invalid_argument("check_hypothesis: v1 is not contained in s1");
    if (!dec.s2.contains(v2))
        throw std::invalid_argument("check_hypothesis: v2 is not contained in s2");
    HypothesisResult out;
    out.t1 = codimension(dec.s1, v1);
    out.t2 = codimension(dec.s2, v2);
    Subspace w = product_power(v1, v2, k);
    out.in1 = dec.s1.contains(w);
    out.in2 = dec.s2.contains(w);
    if (out.in1 && out.in2) {
        // Either side works; the bound grows with d_side, so prefer the
        // smaller degree, ties to side 1.
        if (d1 && d2 && *d2 < *d1)
            out.side = 2;
        else
            out.side = 1;
    } else if (out.in1) {
        out.side = 1;
    } else if (out.in2) {
        out.side = 2;
    }
    return out;
}

TheoremVerdict verify_theorem_instance(const SumDecomposition& dec, int k,
                                       const Subspace& v1, const Subspace& v2,
                                       Budget& budget,
                                       const VerifyOptions& opts) {
    TheoremVerdict verdict;
    SweepOptions sweep{opts.threads};

    MinDegreeResult m1 = min_symmetric_degree(dec.s1, opts.d_max, budget, sweep);
    MinDegreeResult m2 = min_symmetric_degree(dec.s2, opts.d_max, budget, sweep);
    verdict.d1 = m1.degree;
    verdict.d2 = m2.degree;
    if (m1.budget_exceeded || m2.budget_exceeded) {
        verdict.identity = Tri::budget;
        verdict.note = "budget exhausted while computing summand degrees";
        return verdict;
    }
    if (!m1.degree || !m2.degree) {
        verdict.note = "no symmetric identity of degree <= " +
                       std::to_string(opts.d_max) + " on summand " +
                       (m1.degree ? "2" : "1");
        return verdict;
    }

    HypothesisResult hyp = check_hypothesis(dec, k, v1, v2, m1.degree, m2.degree);
    verdict.t1 = hyp.t1;
    verdict.t2 = hyp.t2;
    verdict.side = hyp.side;
    verdict.hypothesis_ok = hyp.side.has_value();
    if (!verdict.hypothesis_ok) {
        verdict.note = "(v1 v2)^k is contained in neither summand";
        return verdict;
    }

    BoundParams bp;
    bp.d1 = *m1.degree;
    bp.d2 = *m2.degree;
    bp.k = k;
    bp.t1 = hyp.t1;
    bp.t2 = hyp.t2;
    bp.p = dec.algebra->p();
    bp.side = *hyp.side;
    verdict.params = bp;
    int64_t bound = theorem_bound(bp);
    verdict.bound = bound;

    if (bound < 1) {
        // Only reachable with a degenerate summand (d_i = 1 forces the zero
        // algebra); s_1 then vanishes on the ambient space as well.
        verdict.note = "degenerate bound clamped to 1";
        bound = 1;
    }
    if (bound > kMaxSymmetricDegree) {
        verdict.identity = Tri::budget;
        verdict.note = "bound " + std::to_string(bound) +
                       " exceeds the subset-DP degree cap";
        return verdict;
    }

    IdentityReport rep =
        check_symmetric(Subspace::full(dec.algebra), int(bound), budget, sweep);
    verdict.tuples_checked = rep.tuples_checked;
    switch (rep.outcome) {
        case Outcome::holds: verdict.identity = Tri::yes; break;
        case Outcome::fails:
            verdict.identity = Tri::no;
            verdict.witness = rep.witness;
            break;
        case Outcome::budget: verdict.identity = Tri::budget; break;
    }

    if (opts.want_d_star && rep.outcome != Outcome::budget) {
        // When the identity holds at `bound`, a minimal degree <= bound must
        // exist, so that is the natural search cap.
        MinDegreeResult star = min_symmetric_degree(Subspace::full(dec.algebra),
                                                    int(bound), budget, sweep);
        verdict.d_star = star.degree;
        verdict.d_star_budget = star.budget_exceeded;
    }
    return verdict;
}

}  // namespace sumpi
