#include "sumpi/zoo.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumpi {

const Subspace& AlgebraFile::subspace(const std::string& name) const {
    auto it = subspaces.find(name);
    if (it == subspaces.end())
        throw std::invalid_argument("no subspace named '" + name + "' in algebra '" +
                                    algebra->name() + "'");
    return it->second;
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

namespace zoo {

namespace {

void check_range(const char* what, int v, int lo, int hi) {
    if (v < lo || v > hi)
        throw std::invalid_argument(std::string(what) + " expects a parameter in [" +
                                    std::to_string(lo) + "," + std::to_string(hi) +
                                    "], got " + std::to_string(v));
}

std::string matrix_label(int i, int j) {
    return "e" + std::to_string(i) + std::to_string(j);
}

AlgebraFile finish(std::shared_ptr<Algebra> a,
                   std::map<std::string, std::vector<Element>> generators) {
    AlgebraFile f;
    f.associative = a->is_associative();
    f.algebra = std::move(a);
    f.subspaces.emplace("full", Subspace::full(f.algebra));
    for (auto& [name, gens] : generators)
        f.subspaces.emplace(name, Subspace::span(f.algebra, gens));
    return f;
}

}  // namespace

AlgebraFile upper_triangular(int n, uint32_t p) {
    check_range("upper_triangular", n, 1, 6);
    // Diagonal units first, then the strictly upper ones in (i,j) order.
    std::vector<std::pair<int, int>> units;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) units.push_back({i, i});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) units.push_back({i, j});
    for (auto [i, j] : units) labels.push_back(matrix_label(i, j));

    auto index_of = [&](int i, int j) {
        for (size_t t = 0; t < units.size(); ++t)
            if (units[t] == std::make_pair(i, j)) return int(t);
        return -1;
    };
    auto a = std::make_shared<Algebra>("U" + std::to_string(n) + "_F" + std::to_string(p),
                                       p, int(units.size()), labels);
    for (size_t u = 0; u < units.size(); ++u)
        for (size_t v = 0; v < units.size(); ++v) {
            auto [i, j] = units[u];
            auto [k, l] = units[v];
            if (j != k) continue;
            a->set_sc(int(u), int(v), index_of(i, l), 1 % p);
        }

    std::map<std::string, std::vector<Element>> gens;
    for (int i = 0; i < n; ++i) gens["D"].push_back(a->basis_element(i));
    gens["N"] = {};
    for (size_t t = size_t(n); t < units.size(); ++t)
        gens["N"].push_back(a->basis_element(int(t)));
    return finish(std::move(a), std::move(gens));
}

AlgebraFile strictly_upper(int n, uint32_t p) {
    check_range("strictly_upper", n, 2, 6);
    std::vector<std::pair<int, int>> units;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) units.push_back({i, j});
    for (auto [i, j] : units) labels.push_back(matrix_label(i, j));

    auto index_of = [&](int i, int j) {
        for (size_t t = 0; t < units.size(); ++t)
            if (units[t] == std::make_pair(i, j)) return int(t);
        return -1;
    };
    auto a = std::make_shared<Algebra>("N" + std::to_string(n) + "_F" + std::to_string(p),
                                       p, int(units.size()), labels);
    for (size_t u = 0; u < units.size(); ++u)
        for (size_t v = 0; v < units.size(); ++v) {
            auto [i, j] = units[u];
            auto [k, l] = units[v];
            if (j != k) continue;
            a->set_sc(int(u), int(v), index_of(i, l), 1 % p);
        }
    return finish(std::move(a), {});
}

AlgebraFile diagonal(int n, uint32_t p) {
    check_range("diagonal", n, 1, 16);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(matrix_label(i, i));
    auto a = std::make_shared<Algebra>("D" + std::to_string(n) + "_F" + std::to_string(p),
                                       p, n, labels);
    for (int i = 0; i < n; ++i) a->set_sc(i, i, i, 1 % p);
    return finish(std::move(a), {});
}

AlgebraFile full_matrix(int n, uint32_t p) {
    check_range("full_matrix", n, 1, 4);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) labels.push_back(matrix_label(i, j));
    auto index_of = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    auto a = std::make_shared<Algebra>("M" + std::to_string(n) + "_F" + std::to_string(p),
                                       p, n * n, labels);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l)
                a->set_sc(index_of(i, j), index_of(j, l), index_of(i, l), 1 % p);
    return finish(std::move(a), {});
}

AlgebraFile truncated_poly(int m, uint32_t p) {
    check_range("truncated_poly", m, 2, 8);
    std::vector<std::string> labels;
    for (int i = 1; i < m; ++i)
        labels.push_back(i == 1 ? "x" : "x" + std::to_string(i));
    auto a = std::make_shared<Algebra>("TP" + std::to_string(m) + "_F" + std::to_string(p),
                                       p, m - 1, labels);
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j)
            if (i + j < m) a->set_sc(i - 1, j - 1, i + j - 1, 1 % p);
    return finish(std::move(a), {});
}

AlgebraFile direct_sum(const AlgebraFile& f1, const AlgebraFile& f2) {
    const Algebra& a1 = *f1.algebra;
    const Algebra& a2 = *f2.algebra;
    if (a1.p() != a2.p())
        throw std::invalid_argument("direct_sum: mismatched characteristics");
    const int n1 = a1.dim(), n2 = a2.dim();
    if (n1 + n2 > Algebra::kMaxDim)
        throw std::invalid_argument("direct_sum: combined dimension exceeds " +
                                    std::to_string(Algebra::kMaxDim));
    std::vector<std::string> labels;
    for (int i = 0; i < n1; ++i) labels.push_back("a_" + a1.basis_label(i));
    for (int i = 0; i < n2; ++i) labels.push_back("b_" + a2.basis_label(i));
    auto a = std::make_shared<Algebra>(a1.name() + "_plus_" + a2.name(), a1.p(),
                                       n1 + n2, labels);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (auto [k, v] : a1.sc_row(i, j)) a->set_sc(i, j, k, v);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j)
            for (auto [k, v] : a2.sc_row(i, j)) a->set_sc(n1 + i, n1 + j, n1 + k, v);

    auto embed = [&](const Element& x, int offset, int src_dim) {
        Element y = a->zero();
        for (int i = 0; i < src_dim; ++i) y.coords[size_t(offset + i)] = x.coords[size_t(i)];
        return y;
    };
    std::map<std::string, std::vector<Element>> gens;
    for (const auto& [name, sub] : f1.subspaces)
        for (const Element& row : sub.rows())
            gens["a1_" + name].push_back(embed(row, 0, n1));
    for (const auto& [name, sub] : f2.subspaces)
        for (const Element& row : sub.rows())
            gens["a2_" + name].push_back(embed(row, n1, n2));
    // Zero subspaces of the operands still deserve their prefixed names.
    for (const auto& [name, sub] : f1.subspaces) gens.try_emplace("a1_" + name);
    for (const auto& [name, sub] : f2.subspaces) gens.try_emplace("a2_" + name);
    return finish(std::move(a), std::move(gens));
}

}  // namespace zoo

}  // namespace sumpi
