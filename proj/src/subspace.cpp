#include "sumpi/subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumpi/rng.hpp"

namespace sumpi {

namespace {

int pivot_of(const Element& row) {
    for (size_t i = 0; i < row.coords.size(); ++i)
        if (row.coords[i] != 0) return int(i);
    return -1;
}

void require_same_algebra(const Subspace& s, const Subspace& t, const char* what) {
    if (!(*s.algebra() == *t.algebra()))
        throw std::invalid_argument(std::string(what) +
                                    ": subspaces belong to different algebras");
}

// Reduces x against rows (which are in reduced echelon form); returns the
// residue.
Element reduce_against(const Algebra& a, const std::vector<Element>& rows,
                       Element x) {
    const Fp& f = a.field();
    for (const Element& row : rows) {
        int piv = pivot_of(row);
        uint32_t c = x.coords[size_t(piv)];
        if (c == 0) continue;
        // row has leading coefficient 1, so subtract c * row.
        for (size_t i = size_t(piv); i < x.coords.size(); ++i)
            x.coords[i] = f.sub(x.coords[i], f.mul(c, row.coords[i]));
    }
    return x;
}

// Inserts x into rows, keeping reduced echelon form with pivots strictly
// increasing. No-op if x is dependent.
void rref_insert(const Algebra& a, std::vector<Element>& rows, Element x) {
    const Fp& f = a.field();
    x = reduce_against(a, rows, std::move(x));
    int piv = pivot_of(x);
    if (piv < 0) return;
    uint32_t lead = x.coords[size_t(piv)];
    if (lead != 1) {
        uint32_t il = f.inv(lead);
        for (auto& c : x.coords) c = f.mul(il, c);
    }
    // Back-eliminate the new pivot column from existing rows.
    for (Element& row : rows) {
        uint32_t c = row.coords[size_t(piv)];
        if (c == 0) continue;
        for (size_t i = 0; i < row.coords.size(); ++i)
            row.coords[i] = f.sub(row.coords[i], f.mul(c, x.coords[i]));
    }
    auto pos = std::lower_bound(rows.begin(), rows.end(), piv,
                                [](const Element& r, int pv) { return pivot_of(r) < pv; });
    rows.insert(pos, std::move(x));
}

}  // namespace

Subspace Subspace::span(AlgebraPtr a, const std::vector<Element>& vectors) {
    if (!a) throw std::invalid_argument("span: null algebra");
    std::vector<Element> rows;
    for (const Element& v : vectors) {
        if (int(v.coords.size()) != a->dim())
            throw std::invalid_argument("span: element dimension mismatch");
        rref_insert(*a, rows, v);
    }
    return Subspace(std::move(a), std::move(rows));
}

Subspace Subspace::zero(AlgebraPtr a) { return span(std::move(a), {}); }

Subspace Subspace::full(AlgebraPtr a) {
    std::vector<Element> basis;
    for (int i = 0; i < a->dim(); ++i) basis.push_back(a->basis_element(i));
    return span(std::move(a), basis);
}

bool Subspace::contains(const Element& x) const {
    if (int(x.coords.size()) != alg_->dim())
        throw std::invalid_argument("contains: element dimension mismatch");
    return reduce_against(*alg_, rows_, x).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    require_same_algebra(*this, other, "contains");
    for (const Element& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return *alg_ == *other.alg_ && rows_ == other.rows_;
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
    require_same_algebra(s, t, "subspace_sum");
    std::vector<Element> gens = s.rows();
    gens.insert(gens.end(), t.rows().begin(), t.rows().end());
    return Subspace::span(s.algebra(), gens);
}

Subspace subspace_product(const Subspace& s, const Subspace& t) {
    require_same_algebra(s, t, "subspace_product");
    const Algebra& a = *s.algebra();
    std::vector<Element> gens;
    gens.reserve(size_t(s.dim()) * size_t(t.dim()));
    for (const Element& v : s.rows())
        for (const Element& w : t.rows()) gens.push_back(a.multiply(v, w));
    return Subspace::span(s.algebra(), gens);
}

Subspace product_power(const Subspace& s1, const Subspace& s2, int k) {
    require_same_algebra(s1, s2, "product_power");
    if (k < 1)
        throw std::invalid_argument(
            "product_power: exponent must be >= 1 (no unity, empty product undefined)");
    Subspace w1 = subspace_product(s1, s2);
    Subspace w = w1;
    for (int j = 1; j < k; ++j) w = subspace_product(w, w1);
    return w;
}

int codimension(const Subspace& ambient, const Subspace& v) {
    require_same_algebra(ambient, v, "codimension");
    for (size_t i = 0; i < v.rows().size(); ++i)
        if (!ambient.contains(v.rows()[i]))
            throw std::invalid_argument(
                "codimension: not a subspace of ambient (row " +
                std::to_string(i + 1) + ": " +
                ambient.algebra()->format_element(v.rows()[i]) + ")");
    return ambient.dim() - v.dim();
}

std::optional<ClosureWitness> closure_witness(const Subspace& s) {
    const Algebra& a = *s.algebra();
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) {
            Element prod = a.multiply(s.rows()[size_t(i)], s.rows()[size_t(j)]);
            if (!s.contains(prod))
                return ClosureWitness{{i, j}, std::move(prod)};
        }
    return std::nullopt;
}

bool is_subalgebra(const Subspace& s) { return !closure_witness(s).has_value(); }

std::optional<int> nilpotency_index(const Subspace& s, int cap) {
    if (cap < 1) throw std::invalid_argument("nilpotency_index: cap must be >= 1");
    if (auto w = closure_witness(s))
        throw std::invalid_argument(
            "nilpotency_index: subspace is not closed under multiplication (rows " +
            std::to_string(w->rows[0] + 1) + "," + std::to_string(w->rows[1] + 1) + ")");
    Subspace power = s;
    for (int m = 1; m <= cap; ++m) {
        if (power.is_zero()) return m;
        if (m < cap) power = subspace_product(power, s);
    }
    return std::nullopt;
}

DecompositionCheck check_sum_decomposition(const AlgebraPtr& a,
                                           const Subspace& s1,
                                           const Subspace& s2) {
    if (!(*s1.algebra() == *a) || !(*s2.algebra() == *a))
        throw std::invalid_argument(
            "check_sum_decomposition: subspace algebra mismatch");
    DecompositionCheck out;
    if (subspace_sum(s1, s2).dim() != a->dim()) {
        out.error = "not spanning";
        return out;
    }
    if (auto w = closure_witness(s1)) {
        out.error = "s1 not closed";
        out.witness = std::move(w);
        return out;
    }
    if (auto w = closure_witness(s2)) {
        out.error = "s2 not closed";
        out.witness = std::move(w);
        return out;
    }
    out.ok = true;
    out.decomposition = SumDecomposition{a, s1, s2};
    return out;
}

Element random_element(const Subspace& s, Rng& rng) {
    const Algebra& a = *s.algebra();
    Element x = a.zero();
    for (const Element& row : s.rows()) {
        uint32_t c = rng.below(a.p());
        if (c == 0) continue;
        for (size_t i = 0; i < x.coords.size(); ++i)
            x.coords[i] = a.field().add(x.coords[i], a.field().mul(c, row.coords[i]));
    }
    return x;
}

}  // namespace sumpi
