#include "sumpi/symmetric.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace sumpi {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::holds: return "holds";
        case Outcome::fails: return "fails";
        case Outcome::budget: return "budget";
    }
    return "?";
}

uint64_t eval_symmetric_cost(int d) {
    // The DP multiplies once per (mask, member) pair with |mask| >= 2:
    // sum_{k>=2} k*C(d,k) = d*2^(d-1) - d.
    if (d < 1) return 0;
    return uint64_t(d) * (uint64_t(1) << (d - 1)) - uint64_t(d);
}

namespace {

// Reusable DP state for s_d evaluation; one instance per worker thread.
struct SymScratch {
    std::vector<uint32_t> dp;

    // args as raw coordinate pointers; result written to out (length n).
    void eval(const Algebra& a, std::span<const uint32_t* const> args,
              uint32_t* out) {
        const int d = int(args.size());
        const size_t n = size_t(a.dim());
        const size_t states = size_t(1) << d;
        if (dp.size() < states * n) dp.resize(states * n);
        for (int i = 0; i < d; ++i) {
            uint32_t* slot = dp.data() + (size_t(1) << i) * n;
            std::copy(args[size_t(i)], args[size_t(i)] + n, slot);
        }
        for (size_t mask = 3; mask < states; ++mask) {
            if ((mask & (mask - 1)) == 0) continue;  // singletons already set
            uint32_t* slot = dp.data() + mask * n;
            std::fill(slot, slot + n, 0);
            for (int i = 0; i < d; ++i) {
                if (!(mask >> i & 1)) continue;
                const uint32_t* prev = dp.data() + (mask ^ (size_t(1) << i)) * n;
                a.multiply_add_raw(prev, args[size_t(i)], slot);
            }
        }
        const uint32_t* last = dp.data() + (states - 1) * n;
        std::copy(last, last + n, out);
    }
};

void check_degree_cap(int d) {
    if (d < 1) throw std::invalid_argument("symmetric degree must be >= 1");
    if (d > kMaxSymmetricDegree)
        throw BudgetError("symmetric degree " + std::to_string(d) +
                          " exceeds the subset-DP cap of " +
                          std::to_string(kMaxSymmetricDegree));
}

Element eval_symmetric_nocharge(const Algebra& a, std::span<const Element> args) {
    SymScratch scratch;
    std::vector<const uint32_t*> ptrs;
    ptrs.reserve(args.size());
    for (const Element& e : args) ptrs.push_back(e.coords.data());
    Element out = a.zero();
    scratch.eval(a, ptrs, out.coords.data());
    return out;
}

constexpr uint64_t kChunk = 1024;

struct SweepHit {
    uint64_t rank;
    std::vector<int> indices;
    Element value;
};

// Scans ranks 0..n_tuples-1 for the lexicographically first violation.
// probe(rank, indices_out) returns the nonzero value at that tuple, if any.
// The parallel path partitions into chunks; the result (and every derived
// counter) depends only on the inputs, never on the schedule.
template <typename ProbeFactory>
std::optional<SweepHit> sweep_lex_first(uint64_t n_tuples, int threads,
                                        ProbeFactory make_probe) {
    threads = std::clamp(threads, 1, 64);
    if (threads == 1 || n_tuples <= kChunk) {
        auto probe = make_probe();
        std::vector<int> indices;
        for (uint64_t rank = 0; rank < n_tuples; ++rank) {
            if (auto value = probe(rank, indices))
                return SweepHit{rank, indices, std::move(*value)};
        }
        return std::nullopt;
    }

    std::atomic<uint64_t> next_chunk{0};
    std::atomic<uint64_t> best_rank{UINT64_MAX};
    std::mutex best_mutex;
    std::optional<SweepHit> best;

    auto worker = [&] {
        auto probe = make_probe();
        std::vector<int> indices;
        for (;;) {
            uint64_t start = next_chunk.fetch_add(kChunk);
            if (start >= n_tuples) return;
            if (start > best_rank.load(std::memory_order_relaxed)) continue;
            uint64_t stop = std::min(start + kChunk, n_tuples);
            for (uint64_t rank = start; rank < stop; ++rank) {
                if (rank > best_rank.load(std::memory_order_relaxed)) break;
                auto value = probe(rank, indices);
                if (!value) continue;
                std::lock_guard<std::mutex> lock(best_mutex);
                if (rank < best_rank.load()) {
                    best_rank.store(rank);
                    best = SweepHit{rank, indices, std::move(*value)};
                }
                break;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(size_t(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return best;
}

// rank -> tuple of d digits base `dim`, most significant first.
void unrank_tuple(uint64_t rank, int dim, int d, std::vector<int>& out) {
    out.assign(size_t(d), 0);
    for (int pos = d - 1; pos >= 0; --pos) {
        out[size_t(pos)] = int(rank % uint64_t(dim));
        rank /= uint64_t(dim);
    }
}

// rank -> non-decreasing tuple (multiset) of d values in [0, dim), in
// lexicographic order, via the bijection with d-combinations of dim+d-1.
void unrank_multiset(uint64_t rank, int dim, int d, std::vector<int>& out) {
    out.assign(size_t(d), 0);
    const unsigned M = unsigned(dim + d - 1);
    unsigned v = 0;
    for (int pos = 0; pos < d; ++pos) {
        unsigned remaining = unsigned(d - 1 - pos);
        for (;; ++v) {
            uint64_t cnt = binom_sat(M - 1 - v, remaining);
            if (rank < cnt) break;
            rank -= cnt;
        }
        out[size_t(pos)] = int(v) - pos;
        ++v;
    }
}

struct SweepOutcome {
    IdentityReport report;
    uint64_t tuples_probed;  // rank+1 of the witness, or n_tuples
};

// Shared skeleton: reserve worst-case cost, sweep, refund the unprobed part.
template <typename ProbeFactory>
IdentityReport run_sweep(uint64_t n_tuples, uint64_t per_tuple_cost,
                         Budget& budget, int threads, ProbeFactory make_probe) {
    IdentityReport report;
    const uint64_t predicted = sat_mul(n_tuples, per_tuple_cost);
    if (!budget.fits(predicted)) {
        report.outcome = Outcome::budget;
        return report;
    }
    budget.charge(predicted);
    auto hit = sweep_lex_first(n_tuples, threads, make_probe);
    if (hit) {
        report.outcome = Outcome::fails;
        report.tuples_checked = hit->rank + 1;
        report.witness = Witness{std::move(hit->indices), std::move(hit->value)};
    } else {
        report.outcome = Outcome::holds;
        report.tuples_checked = n_tuples;
    }
    budget.refund(sat_mul(n_tuples - report.tuples_checked, per_tuple_cost));
    return report;
}

}  // namespace

Element eval_symmetric(const Algebra& a, std::span<const Element> args,
                       Budget& budget) {
    const int d = int(args.size());
    check_degree_cap(d);
    for (const Element& e : args)
        if (int(e.coords.size()) != a.dim())
            throw std::invalid_argument("eval_symmetric: element dimension mismatch");
    budget.charge(eval_symmetric_cost(d));
    return eval_symmetric_nocharge(a, args);
}

Element eval_symmetric(const Algebra& a, std::span<const Element> args) {
    Budget budget;
    return eval_symmetric(a, args, budget);
}

IdentityReport check_identity(const MultilinearPoly& f, const Subspace& s,
                              Budget& budget, const SweepOptions& opts) {
    const int d = f.degree();
    const int dim = s.dim();
    const uint64_t n_tuples = sat_pow(uint64_t(dim), unsigned(d));
    const uint64_t per_tuple = uint64_t(f.terms().size()) * uint64_t(d - 1);
    const Algebra& a = *s.algebra();

    auto make_probe = [&] {
        return [&, buf_a = a.zero(), buf_b = a.zero(), acc = a.zero()](
                   uint64_t rank, std::vector<int>& indices) mutable
                   -> std::optional<Element> {
            unrank_tuple(rank, dim, d, indices);
            std::fill(acc.coords.begin(), acc.coords.end(), 0);
            for (const MonomialTerm& t : f.terms()) {
                const Element* cur = &s.rows()[size_t(indices[size_t(t.perm[0])])];
                for (size_t i = 1; i < t.perm.size(); ++i) {
                    Element& dst = (cur == &buf_a) ? buf_b : buf_a;
                    std::fill(dst.coords.begin(), dst.coords.end(), 0);
                    a.multiply_add(*cur, s.rows()[size_t(indices[size_t(t.perm[i])])], dst);
                    cur = &dst;
                }
                uint32_t c = a.field().reduce(t.coeff);
                if (c == 0) continue;
                for (int i = 0; i < a.dim(); ++i)
                    acc.coords[size_t(i)] = a.field().add(
                        acc.coords[size_t(i)], a.field().mul(c, cur->coords[size_t(i)]));
            }
            if (acc.is_zero()) return std::nullopt;
            return acc;
        };
    };
    return run_sweep(n_tuples, per_tuple, budget, opts.threads, make_probe);
}

IdentityReport check_identity(const MultilinearPoly& f, const Subspace& s) {
    Budget budget;
    return check_identity(f, s, budget);
}

IdentityReport check_symmetric(const Subspace& s, int d, Budget& budget,
                               const SweepOptions& opts) {
    try {
        check_degree_cap(d);
    } catch (const BudgetError&) {
        return IdentityReport{Outcome::budget, std::nullopt, 0};
    }
    const int dim = s.dim();
    const uint64_t n_tuples = binom_sat(unsigned(dim + d - 1), unsigned(d));
    const uint64_t per_tuple = eval_symmetric_cost(d);
    const Algebra& a = *s.algebra();

    auto make_probe = [&] {
        return [&, scratch = SymScratch{}, args = std::vector<const uint32_t*>(),
                value = a.zero()](uint64_t rank, std::vector<int>& indices) mutable
                   -> std::optional<Element> {
            unrank_multiset(rank, dim, d, indices);
            args.clear();
            for (int idx : indices) args.push_back(s.rows()[size_t(idx)].coords.data());
            scratch.eval(a, args, value.coords.data());
            if (value.is_zero()) return std::nullopt;
            return value;
        };
    };
    return run_sweep(n_tuples, per_tuple, budget, opts.threads, make_probe);
}

IdentityReport check_symmetric(const Subspace& s, int d) {
    Budget budget;
    return check_symmetric(s, d, budget);
}

MinDegreeResult min_symmetric_degree(const Subspace& s, int d_max,
                                     Budget& budget, const SweepOptions& opts) {
    if (d_max < 1)
        throw std::invalid_argument("min_symmetric_degree: d_max must be >= 1");
    for (int d = 1; d <= d_max; ++d) {
        IdentityReport rep = check_symmetric(s, d, budget, opts);
        if (rep.outcome == Outcome::holds) return {d, false};
        if (rep.outcome == Outcome::budget) return {std::nullopt, true};
    }
    return {std::nullopt, false};
}

MinDegreeResult min_symmetric_degree(const Subspace& s, int d_max) {
    Budget budget;
    return min_symmetric_degree(s, d_max, budget);
}

}  // namespace sumpi
