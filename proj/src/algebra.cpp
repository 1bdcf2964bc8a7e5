#include "sumpi/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumpi {

Algebra::Algebra(std::string name, uint32_t p, int n,
                 std::vector<std::string> basis_labels)
    : name_(std::move(name)), fp_(p), n_(n), labels_(std::move(basis_labels)) {
    if (n_ < 1 || n_ > kMaxDim)
        throw std::invalid_argument("algebra dimension out of range [1," +
                                    std::to_string(kMaxDim) +
                                    "]: " + std::to_string(n_));
    if (!labels_.empty() && int(labels_.size()) != n_)
        throw std::invalid_argument("expected " + std::to_string(n_) +
                                    " basis labels, got " +
                                    std::to_string(labels_.size()));
    sc_.resize(size_t(n_) * n_);
}

void Algebra::check_index(int i, const char* what) const {
    if (i < 0 || i >= n_)
        throw std::invalid_argument(std::string(what) + " index out of range: " +
                                    std::to_string(i));
}

void Algebra::check_element(const Element& x, const char* what) const {
    if (int(x.coords.size()) != n_)
        throw std::invalid_argument(std::string(what) +
                                    ": element dimension mismatch (expected " +
                                    std::to_string(n_) + ", got " +
                                    std::to_string(x.coords.size()) + ")");
}

void Algebra::set_sc(int i, int j, int k, uint32_t v) {
    check_index(i, "sc");
    check_index(j, "sc");
    check_index(k, "sc");
    if (v >= fp_.p)
        throw std::invalid_argument("structure constant out of range [0,p): " +
                                    std::to_string(v));
    auto& row = sc_[size_t(i) * n_ + j];
    auto it = std::lower_bound(row.begin(), row.end(), k,
                               [](const auto& e, int kk) { return e.first < kk; });
    if (it != row.end() && it->first == k) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {k, v});
    }
}

uint32_t Algebra::sc(int i, int j, int k) const {
    check_index(i, "sc");
    check_index(j, "sc");
    check_index(k, "sc");
    for (const auto& [kk, v] : sc_[size_t(i) * n_ + j])
        if (kk == k) return v;
    return 0;
}

Element Algebra::basis_element(int i) const {
    check_index(i, "basis");
    Element e = zero();
    e.coords[size_t(i)] = 1 % fp_.p;
    return e;
}

Element Algebra::element(std::vector<uint32_t> coords) const {
    Element e{std::move(coords)};
    check_element(e, "element");
    for (uint32_t c : e.coords)
        if (c >= fp_.p)
            throw std::invalid_argument("coordinate out of range [0,p): " +
                                        std::to_string(c));
    return e;
}

Element Algebra::add(const Element& x, const Element& y) const {
    check_element(x, "add");
    check_element(y, "add");
    Element r = zero();
    for (int i = 0; i < n_; ++i)
        r.coords[size_t(i)] = fp_.add(x.coords[size_t(i)], y.coords[size_t(i)]);
    return r;
}

Element Algebra::sub(const Element& x, const Element& y) const {
    check_element(x, "sub");
    check_element(y, "sub");
    Element r = zero();
    for (int i = 0; i < n_; ++i)
        r.coords[size_t(i)] = fp_.sub(x.coords[size_t(i)], y.coords[size_t(i)]);
    return r;
}

Element Algebra::scale(uint32_t lambda, const Element& x) const {
    check_element(x, "scale");
    if (lambda >= fp_.p)
        throw std::invalid_argument("scalar out of range [0,p)");
    Element r = zero();
    for (int i = 0; i < n_; ++i)
        r.coords[size_t(i)] = fp_.mul(lambda, x.coords[size_t(i)]);
    return r;
}

void Algebra::multiply_add_raw(const uint32_t* x, const uint32_t* y,
                               uint32_t* acc) const {
    const uint64_t p = fp_.p;
    for (int i = 0; i < n_; ++i) {
        uint64_t xi = x[i];
        if (xi == 0) continue;
        const size_t base = size_t(i) * n_;
        for (int j = 0; j < n_; ++j) {
            uint64_t yj = y[j];
            if (yj == 0) continue;
            const auto& row = sc_[base + j];
            if (row.empty()) continue;
            uint64_t t = xi * yj % p;
            if (t == 0) continue;
            for (const auto& [k, v] : row)
                acc[k] = uint32_t((acc[k] + v * t) % p);
        }
    }
}

void Algebra::multiply_add(const Element& x, const Element& y, Element& acc) const {
    check_element(x, "multiply");
    check_element(y, "multiply");
    check_element(acc, "multiply");
    multiply_add_raw(x.coords.data(), y.coords.data(), acc.coords.data());
}

Element Algebra::multiply(const Element& x, const Element& y) const {
    check_element(x, "multiply");
    check_element(y, "multiply");
    Element r = zero();
    multiply_add(x, y, r);
    return r;
}

std::optional<std::array<int, 3>> Algebra::associativity_witness() const {
    // Works on the sparse table directly: lhs = (e_i e_j) e_k, rhs = e_i (e_j e_k).
    std::vector<uint64_t> lhs(static_cast<size_t>(n_));
    std::vector<uint64_t> rhs(static_cast<size_t>(n_));
    const uint64_t p = fp_.p;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const auto& ij = sc_[size_t(i) * n_ + j];
            for (int k = 0; k < n_; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                // (e_i e_j) e_k
                for (const auto& [l, v] : ij)
                    for (const auto& [m, w] : sc_[size_t(l) * n_ + k])
                        lhs[size_t(m)] = (lhs[size_t(m)] + uint64_t(v) * w) % p;
                // e_i (e_j e_k)
                for (const auto& [l, v] : sc_[size_t(j) * n_ + k])
                    for (const auto& [m, w] : sc_[size_t(i) * n_ + l])
                        rhs[size_t(m)] = (rhs[size_t(m)] + uint64_t(v) * w) % p;
                if (lhs != rhs) return std::array<int, 3>{i, j, k};
            }
        }
    }
    return std::nullopt;
}

std::string Algebra::basis_label(int i) const {
    check_index(i, "basis");
    if (!labels_.empty()) return labels_[size_t(i)];
    return "b" + std::to_string(i + 1);
}

std::string Algebra::format_element(const Element& x) const {
    check_element(x, "format");
    std::string out;
    for (int i = 0; i < n_; ++i) {
        uint32_t c = x.coords[size_t(i)];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += basis_label(i);
    }
    return out.empty() ? "0" : out;
}

bool Algebra::operator==(const Algebra& other) const {
    return name_ == other.name_ && fp_.p == other.fp_.p && n_ == other.n_ &&
           labels_ == other.labels_ && sc_ == other.sc_;
}

}  // namespace sumpi
