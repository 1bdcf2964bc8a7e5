#pragma once

#include <array>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumpi/fp.hpp"

namespace sumpi {

/// Coordinate vector of an algebra element over the owning algebra's basis.
/// Plain value type; the modulus and dimension live in the Algebra.
struct Element {
    std::vector<uint32_t> coords;

    bool is_zero() const {
        for (uint32_t c : coords)
            if (c != 0) return false;
        return true;
    }
    auto operator<=>(const Element&) const = default;
};

/// Finite-dimensional associative algebra over F_p given by structure
/// constants: e_i * e_j = sum_k sc(i,j,k) e_k. Indices are 0-based in the
/// API; the on-disk format is 1-based. No unity is assumed.
class Algebra {
public:
    static constexpr int kMaxDim = 64;

    Algebra(std::string name, uint32_t p, int n,
            std::vector<std::string> basis_labels = {});

    const std::string& name() const { return name_; }
    uint32_t p() const { return fp_.p; }
    int dim() const { return n_; }
    const Fp& field() const { return fp_; }
    // Empty when the basis is unnamed; otherwise one label per basis element.
    const std::vector<std::string>& labels() const { return labels_; }

    // Sets the coefficient of e_k in e_i * e_j (overwriting any previous
    // value; v = 0 clears the entry). Build-time only: an Algebra is treated
    // as immutable once shared.
    void set_sc(int i, int j, int k, uint32_t v);
    uint32_t sc(int i, int j, int k) const;
    // Nonzero entries of the product e_i * e_j as (k, coefficient) pairs,
    // sorted by k.
    const std::vector<std::pair<int, uint32_t>>& sc_row(int i, int j) const {
        return sc_[size_t(i) * n_ + j];
    }

    Element zero() const { return Element{std::vector<uint32_t>(size_t(n_), 0)}; }
    Element basis_element(int i) const;
    // Validates length and residue ranges.
    Element element(std::vector<uint32_t> coords) const;

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element scale(uint32_t lambda, const Element& x) const;
    Element multiply(const Element& x, const Element& y) const;
    // acc += x * y, without allocating.
    void multiply_add(const Element& x, const Element& y, Element& acc) const;
    // Same on raw coordinate slices of length dim(); evaluation hot path.
    void multiply_add_raw(const uint32_t* x, const uint32_t* y, uint32_t* acc) const;

    // Lexicographically first basis triple (i,j,k) with
    // (e_i e_j) e_k != e_i (e_j e_k), if any.
    std::optional<std::array<int, 3>> associativity_witness() const;
    bool is_associative() const { return !associativity_witness().has_value(); }

    // Human-readable rendering, e.g. "e11 + 2*e12" with labels or
    // "b1 + 2*b3" without.
    std::string format_element(const Element& x) const;
    std::string basis_label(int i) const;

    // Structural equality: same p, dimension, name, labels, and table.
    bool operator==(const Algebra& other) const;

private:
    void check_element(const Element& x, const char* what) const;
    void check_index(int i, const char* what) const;

    std::string name_;
    Fp fp_;
    int n_;
    std::vector<std::string> labels_;
    // sc_[i*n + j] lists the nonzero (k, v) of e_i * e_j, sorted by k.
    std::vector<std::vector<std::pair<int, uint32_t>>> sc_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace sumpi
