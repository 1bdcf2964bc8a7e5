#include "sumpi/delta.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sumpi/rng.hpp"
#include "sumpi/symmetric.hpp"

namespace sumpi {

int Delta::r() const {
    int sum = 0;
    for (int i = 0; i < blocks(); ++i) sum += beta(i);
    return sum;
}

int Delta::s() const {
    int sum = 0;
    for (int i = 0; i < blocks(); ++i) sum += gamma(i);
    return sum;
}

bool Delta::exceeds(int d1, int d2) const {
    for (int i = 0; i < blocks(); ++i)
        if (beta(i) >= d1 || gamma(i) >= d2) return true;
    return false;
}

namespace {

// Compositions of `total` into `count` parts with part i >= mins[i],
// lexicographic order.
void compositions(int total, int count, const std::vector<int>& mins,
                  std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& emit) {
    int pos = int(current.size());
    if (pos == count) {
        if (total == 0) emit(current);
        return;
    }
    int tail_min = 0;
    for (int i = pos + 1; i < count; ++i) tail_min += mins[size_t(i)];
    for (int v = mins[size_t(pos)]; v <= total - tail_min; ++v) {
        current.push_back(v);
        compositions(total - v, count, mins, current, emit);
        current.pop_back();
    }
}

uint64_t factorial(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= uint64_t(i);
    return r;
}

void require_members(const Subspace& space, std::span<const Element> xs,
                     const char* what) {
    for (size_t i = 0; i < xs.size(); ++i)
        if (!space.contains(xs[i]))
            throw std::invalid_argument(std::string(what) + " argument " +
                                        std::to_string(i + 1) +
                                        " lies outside its summand");
}

}  // namespace

std::vector<Delta> enumerate_delta(int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("enumerate_delta: negative size");
    if (r + s < 1 || r + s > 12)
        throw std::invalid_argument("enumerate_delta: r+s must be in [1,12]");
    std::vector<Delta> out;
    for (int m = 1; m <= r + s; ++m) {
        // beta_1 >= 0, beta_2..beta_m >= 1; gamma_1..gamma_{m-1} >= 1,
        // gamma_m >= 0.
        std::vector<int> bmins(size_t(m), 1), gmins(size_t(m), 1);
        bmins[0] = 0;
        gmins[size_t(m - 1)] = 0;
        std::vector<std::vector<int>> betas, gammas;
        std::vector<int> cur;
        compositions(r, m, bmins, cur,
                     [&](const std::vector<int>& c) { betas.push_back(c); });
        compositions(s, m, gmins, cur,
                     [&](const std::vector<int>& c) { gammas.push_back(c); });
        for (const auto& beta : betas)
            for (const auto& gamma : gammas) {
                Delta d;
                for (int i = 0; i < m; ++i) {
                    d.parts.push_back(beta[size_t(i)]);
                    d.parts.push_back(gamma[size_t(i)]);
                }
                out.push_back(std::move(d));
            }
    }
    std::sort(out.begin(), out.end(), [](const Delta& a, const Delta& b) {
        if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
        return a.parts < b.parts;
    });
    return out;
}

Element eval_s_delta(const SumDecomposition& dec, const Delta& delta,
                     std::span<const Element> b, std::span<const Element> c,
                     Budget& budget) {
    const int r = delta.r();
    const int s = delta.s();
    if (int(b.size()) != r || int(c.size()) != s)
        throw std::invalid_argument("eval_s_delta: argument counts do not match the pattern");
    if (r > 7 || s > 7)
        throw std::invalid_argument("eval_s_delta: r and s must be <= 7");
    if (r + s < 1) throw std::invalid_argument("eval_s_delta: empty pattern");
    require_members(dec.s1, b, "eval_s_delta: left");
    require_members(dec.s2, c, "eval_s_delta: right");

    const Algebra& a = *dec.algebra;
    budget.charge(factorial(r) * factorial(s) * uint64_t(r + s - 1));

    std::vector<int> sigma(static_cast<size_t>(r));
    std::vector<int> tau(static_cast<size_t>(s));
    std::iota(sigma.begin(), sigma.end(), 0);
    Element acc = a.zero();
    Element prod = a.zero(), tmp = a.zero();
    do {
        std::iota(tau.begin(), tau.end(), 0);
        do {
            // Interleaved monomial for this (sigma, tau).
            const Element* cur = nullptr;
            int bo = 0, go = 0;
            auto append = [&](const Element& factor) {
                if (cur == nullptr) {
                    tmp = factor;
                    cur = &tmp;
                } else {
                    std::fill(prod.coords.begin(), prod.coords.end(), 0);
                    a.multiply_add(*cur, factor, prod);
                    std::swap(prod, tmp);
                    cur = &tmp;
                }
            };
            for (int u = 0; u < delta.blocks(); ++u) {
                for (int i = 0; i < delta.beta(u); ++i)
                    append(b[size_t(sigma[size_t(bo + i)])]);
                bo += delta.beta(u);
                for (int i = 0; i < delta.gamma(u); ++i)
                    append(c[size_t(tau[size_t(go + i)])]);
                go += delta.gamma(u);
            }
            acc = a.add(acc, *cur);
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc;
}

Element eval_s_delta(const SumDecomposition& dec, const Delta& delta,
                     std::span<const Element> b, std::span<const Element> c) {
    Budget budget;
    return eval_s_delta(dec, delta, b, c, budget);
}

bool verify_decomposition(const SumDecomposition& dec,
                          std::span<const Element> b,
                          std::span<const Element> c, Budget& budget) {
    const int r = int(b.size());
    const int s = int(c.size());
    if (r + s < 1 || r + s > 8)
        throw std::invalid_argument("verify_decomposition: r+s must be in [1,8]");
    require_members(dec.s1, b, "verify_decomposition: left");
    require_members(dec.s2, c, "verify_decomposition: right");

    const Algebra& a = *dec.algebra;
    std::vector<Element> all(b.begin(), b.end());
    all.insert(all.end(), c.begin(), c.end());
    Element lhs = eval_symmetric(a, all, budget);

    Element rhs = a.zero();
    for (const Delta& delta : enumerate_delta(r, s))
        rhs = a.add(rhs, eval_s_delta(dec, delta, b, c, budget));
    return lhs == rhs;
}

bool verify_decomposition(const SumDecomposition& dec,
                          std::span<const Element> b,
                          std::span<const Element> c) {
    Budget budget;
    return verify_decomposition(dec, b, c, budget);
}

bool s_delta_vanishing(const SumDecomposition& dec, int d1, int d2,
                       const Delta& delta, int trials, uint64_t seed,
                       Budget& budget) {
    if (!delta.exceeds(d1, d2))
        throw std::invalid_argument(
            "s_delta_vanishing: no part reaches the summand's symmetric degree");
    const int r = delta.r();
    const int s = delta.s();

    // Exhaustive pass over basis-row tuples, when the budget covers it.
    const uint64_t per_eval =
        factorial(r) * factorial(s) * uint64_t(r + s - 1);
    const uint64_t n_tuples =
        sat_mul(sat_pow(uint64_t(dec.s1.dim()), unsigned(r)),
                sat_pow(uint64_t(dec.s2.dim()), unsigned(s)));
    if (budget.fits(sat_mul(n_tuples, per_eval))) {
        std::vector<int> idx(size_t(r + s), 0);
        std::vector<Element> b(size_t(r), dec.algebra->zero());
        std::vector<Element> c(size_t(s), dec.algebra->zero());
        for (uint64_t t = 0; t < n_tuples; ++t) {
            uint64_t rest = t;
            for (int i = r - 1; i >= 0; --i) {
                idx[size_t(i)] = int(rest % uint64_t(dec.s1.dim()));
                rest /= uint64_t(dec.s1.dim());
            }
            for (int i = s - 1; i >= 0; --i) {
                idx[size_t(r + i)] = int(rest % uint64_t(dec.s2.dim()));
                rest /= uint64_t(dec.s2.dim());
            }
            for (int i = 0; i < r; ++i) b[size_t(i)] = dec.s1.rows()[size_t(idx[size_t(i)])];
            for (int i = 0; i < s; ++i) c[size_t(i)] = dec.s2.rows()[size_t(idx[size_t(r + i)])];
            if (!eval_s_delta(dec, delta, b, c, budget).is_zero()) return false;
        }
    }

    Rng rng(seed);
    std::vector<Element> b(size_t(r), dec.algebra->zero());
    std::vector<Element> c(size_t(s), dec.algebra->zero());
    for (int t = 0; t < trials; ++t) {
        for (int i = 0; i < r; ++i) b[size_t(i)] = random_element(dec.s1, rng);
        for (int i = 0; i < s; ++i) c[size_t(i)] = random_element(dec.s2, rng);
        if (!eval_s_delta(dec, delta, b, c, budget).is_zero()) return false;
    }
    return true;
}

}  // namespace sumpi
