#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumpi/budget.hpp"
#include "sumpi/poly.hpp"
#include "sumpi/subspace.hpp"

namespace sumpi {

// Hard cap on the subset-DP state count (2^d states).
inline constexpr int kMaxSymmetricDegree = 24;

enum class Outcome { holds, fails, budget };

const char* outcome_name(Outcome o);

/// Failing tuple of an identity check: 0-based row indices into the swept
/// subspace basis, plus the nonzero value the polynomial takes there.
struct Witness {
    std::vector<int> indices;
    Element value;
};

struct IdentityReport {
    Outcome outcome = Outcome::holds;
    std::optional<Witness> witness;  // present iff outcome == fails
    uint64_t tuples_checked = 0;
};

struct MinDegreeResult {
    std::optional<int> degree;
    bool budget_exceeded = false;
};

// Element multiplications performed by the subset DP at degree d.
uint64_t eval_symmetric_cost(int d);

// s_d(args) via dynamic programming over argument subsets:
// f({i}) = args[i], f(S) = sum_{i in S} f(S\{i}) * args[i]. Runs in
// O(d 2^d) element multiplications, charged to the budget up front; no
// unity is assumed or used. Throws BudgetError when d exceeds the DP cap
// or the budget cannot cover the run.
Element eval_symmetric(const Algebra& a, std::span<const Element> args,
                       Budget& budget);
Element eval_symmetric(const Algebra& a, std::span<const Element> args);

/// Sweep tuning shared by the exhaustive checks. Worker counts change only
/// the schedule: the reported witness is the lexicographic minimum and all
/// counters are schedule-independent.
struct SweepOptions {
    int threads = 1;
};

// Exhaustively evaluates f on all basis-row tuples of s (sound and complete
// because f is multilinear). Witness is the lexicographically first failing
// tuple. Cost dim(s)^degree * per-tuple cost is reserved up front; if it
// does not fit the budget the outcome is Outcome::budget.
IdentityReport check_identity(const MultilinearPoly& f, const Subspace& s,
                              Budget& budget, const SweepOptions& opts = {});
IdentityReport check_identity(const MultilinearPoly& f, const Subspace& s);

// Decides whether s_d vanishes on s. By symmetry of s_d only multisets of
// basis rows are checked (C(dim+d-1, d) tuples), each via the subset DP;
// equivalent to the full tuple sweep.
IdentityReport check_symmetric(const Subspace& s, int d, Budget& budget,
                               const SweepOptions& opts = {});
IdentityReport check_symmetric(const Subspace& s, int d);

// Least d <= d_max with check_symmetric(s, d) holding. The zero subspace
// yields 1 (s_1 vanishes on no arguments at all).
MinDegreeResult min_symmetric_degree(const Subspace& s, int d_max,
                                     Budget& budget,
                                     const SweepOptions& opts = {});
MinDegreeResult min_symmetric_degree(const Subspace& s, int d_max = 12);

}  // namespace sumpi
