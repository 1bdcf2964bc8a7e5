#include "sumpi/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumpi {

MultilinearPoly::MultilinearPoly(int degree, std::vector<MonomialTerm> terms)
    : degree_(degree), terms_(std::move(terms)) {
    if (degree_ < 1) throw std::invalid_argument("polynomial degree must be >= 1");
    std::vector<bool> seen(static_cast<size_t>(degree_));
    for (const MonomialTerm& t : terms_) {
        if (t.coeff == 0) throw std::invalid_argument("zero coefficient in term list");
        if (int(t.perm.size()) != degree_)
            throw std::invalid_argument("term length does not match degree");
        std::fill(seen.begin(), seen.end(), false);
        for (int v : t.perm) {
            if (v < 0 || v >= degree_ || seen[size_t(v)])
                throw std::invalid_argument("term is not a permutation of 0..d-1");
            seen[size_t(v)] = true;
        }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const MonomialTerm& a, const MonomialTerm& b) { return a.perm < b.perm; });
    for (size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].perm == terms_[i - 1].perm)
            throw std::invalid_argument("duplicate permutation in term list");
}

MultilinearPoly sym_poly(int d) {
    if (d < 1) throw std::invalid_argument("sym_poly: degree must be >= 1");
    if (d > kMaxMaterializedSymDegree)
        throw std::invalid_argument(
            "sym_poly: degree " + std::to_string(d) + " exceeds materialization cap " +
            std::to_string(kMaxMaterializedSymDegree) + "; use eval_symmetric");
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<MonomialTerm> terms;
    do {
        terms.push_back({perm, 1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return MultilinearPoly(d, std::move(terms));
}

MultilinearPoly commutator_poly() { return commutator_product_poly(1); }

MultilinearPoly commutator_square_poly() { return commutator_product_poly(2); }

MultilinearPoly commutator_product_poly(int n) {
    if (n < 1) throw std::invalid_argument("commutator_product_poly: n must be >= 1");
    if (2 * n > kMaxMaterializedSymDegree)
        throw std::invalid_argument("commutator_product_poly: degree cap exceeded");
    const int d = 2 * n;
    std::vector<MonomialTerm> terms;
    // One term per choice of orientation of each commutator factor.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        MonomialTerm t;
        t.coeff = 1;
        for (int i = 0; i < n; ++i) {
            int a = 2 * i, b = 2 * i + 1;
            if (mask >> i & 1) {
                std::swap(a, b);
                t.coeff = -t.coeff;
            }
            t.perm.push_back(a);
            t.perm.push_back(b);
        }
        terms.push_back(std::move(t));
    }
    return MultilinearPoly(d, std::move(terms));
}

Element eval_poly(const Algebra& a, const MultilinearPoly& f,
                  std::span<const Element> args) {
    if (int(args.size()) != f.degree())
        throw std::invalid_argument("eval_poly: expected " +
                                    std::to_string(f.degree()) + " arguments, got " +
                                    std::to_string(args.size()));
    Element acc = a.zero();
    for (const MonomialTerm& t : f.terms()) {
        Element prod = args[size_t(t.perm[0])];
        for (size_t i = 1; i < t.perm.size(); ++i)
            prod = a.multiply(prod, args[size_t(t.perm[i])]);
        uint32_t c = a.field().reduce(t.coeff);
        if (c == 0) continue;
        if (c != 1) prod = a.scale(c, prod);
        acc = a.add(acc, prod);
    }
    return acc;
}

}  // namespace sumpi
