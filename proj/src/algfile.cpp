#include "sumpi/algfile.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

namespace sumpi {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::optional<int64_t> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    int64_t v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        if (v > (INT64_MAX - (s[i] - '0')) / 10) return std::nullopt;
        v = v * 10 + (s[i] - '0');
    }
    return v;
}

int64_t expect_int(const std::string& tok, int line, const char* what) {
    auto v = parse_int(tok);
    if (!v) throw ParseError(line, std::string("expected an integer ") + what +
                                       ", got '" + tok + "'");
    return *v;
}

int64_t expect_keyed_int(const std::string& tok, const std::string& key, int line) {
    if (tok.size() <= key.size() || tok.compare(0, key.size(), key) != 0 ||
        tok[key.size()] != '=')
        throw ParseError(line, "expected " + key + "=<integer>, got '" + tok + "'");
    return expect_int(tok.substr(key.size() + 1), line, key.c_str());
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) lines.push_back(std::move(cur));
    }

    std::shared_ptr<Algebra> algebra;
    std::map<std::tuple<int, int, int>, int> sc_lines;  // first line of each entry
    bool saw_basis = false;

    std::string open_subspace;     // name of the block being read, if any
    int open_subspace_line = 0;
    std::vector<Element> open_vectors;
    std::map<std::string, Subspace> subspaces;
    std::map<std::string, int> subspace_lines;

    for (size_t li = 0; li < lines.size(); ++li) {
        const int ln = int(li) + 1;
        std::vector<std::string> tok = tokenize(lines[li]);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];

        if (kw == "algebra") {
            if (algebra) throw ParseError(ln, "duplicate algebra line");
            if (tok.size() != 4)
                throw ParseError(ln, "expected: algebra <name> p=<prime> dim=<n>");
            if (!valid_identifier(tok[1]))
                throw ParseError(ln, "invalid algebra name '" + tok[1] + "'");
            int64_t p = expect_keyed_int(tok[2], "p", ln);
            int64_t n = expect_keyed_int(tok[3], "dim", ln);
            if (p < 2 || p > 0x7fffffff || !is_prime(uint64_t(p)))
                throw ParseError(ln, "p=" + std::to_string(p) + " is not prime");
            if (n < 1 || n > Algebra::kMaxDim)
                throw ParseError(ln, "dim must be in [1," +
                                         std::to_string(Algebra::kMaxDim) + "]");
            algebra = std::make_shared<Algebra>(tok[1], uint32_t(p), int(n));
            continue;
        }
        if (!algebra) throw ParseError(ln, "expected an algebra line first");
        if (!open_subspace.empty() && kw != "vec" && kw != "end")
            throw ParseError(ln, "unterminated subspace block '" + open_subspace +
                                     "' (missing end)");

        if (kw == "basis") {
            if (saw_basis) throw ParseError(ln, "duplicate basis line");
            if (int(tok.size()) - 1 != algebra->dim())
                throw ParseError(ln, "expected " + std::to_string(algebra->dim()) +
                                         " basis labels, got " +
                                         std::to_string(tok.size() - 1));
            std::vector<std::string> labels(tok.begin() + 1, tok.end());
            for (const std::string& l : labels)
                if (!valid_identifier(l))
                    throw ParseError(ln, "invalid basis label '" + l + "'");
            // Rebuild with labels; sc entries may not precede the basis line.
            if (!sc_lines.empty())
                throw ParseError(ln, "basis line must come before sc entries");
            algebra = std::make_shared<Algebra>(algebra->name(), algebra->p(),
                                                algebra->dim(), labels);
            saw_basis = true;
        } else if (kw == "sc") {
            if (tok.size() != 5) throw ParseError(ln, "expected: sc <i> <j> <k> <v>");
            int64_t i = expect_int(tok[1], ln, "index");
            int64_t j = expect_int(tok[2], ln, "index");
            int64_t k = expect_int(tok[3], ln, "index");
            int64_t v = expect_int(tok[4], ln, "value");
            const int n = algebra->dim();
            if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n)
                throw ParseError(ln, "sc index out of range [1," + std::to_string(n) + "]");
            if (v < 1 || v >= int64_t(algebra->p()))
                throw ParseError(ln, "sc value out of range (0," +
                                         std::to_string(algebra->p()) + ")");
            auto key = std::make_tuple(int(i), int(j), int(k));
            auto [it, fresh] = sc_lines.emplace(key, ln);
            if (!fresh)
                throw ParseError(ln, "duplicate sc entry for (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," +
                                         std::to_string(k) + "): lines " +
                                         std::to_string(it->second) + " and " +
                                         std::to_string(ln));
            algebra->set_sc(int(i) - 1, int(j) - 1, int(k) - 1, uint32_t(v));
        } else if (kw == "subspace") {
            if (tok.size() != 2) throw ParseError(ln, "expected: subspace <name>");
            if (!valid_identifier(tok[1]))
                throw ParseError(ln, "invalid subspace name '" + tok[1] + "'");
            auto it = subspace_lines.find(tok[1]);
            if (it != subspace_lines.end())
                throw ParseError(ln, "duplicate subspace '" + tok[1] + "': lines " +
                                         std::to_string(it->second) + " and " +
                                         std::to_string(ln));
            open_subspace = tok[1];
            open_subspace_line = ln;
            open_vectors.clear();
        } else if (kw == "vec") {
            if (open_subspace.empty())
                throw ParseError(ln, "vec outside a subspace block");
            if (int(tok.size()) - 1 != algebra->dim())
                throw ParseError(ln, "expected " + std::to_string(algebra->dim()) +
                                         " coordinates, got " +
                                         std::to_string(tok.size() - 1));
            Element x = algebra->zero();
            for (int i = 0; i < algebra->dim(); ++i) {
                int64_t v = expect_int(tok[size_t(i) + 1], ln, "coordinate");
                if (v < 0 || v >= int64_t(algebra->p()))
                    throw ParseError(ln, "coordinate out of range [0," +
                                             std::to_string(algebra->p()) + ")");
                x.coords[size_t(i)] = uint32_t(v);
            }
            open_vectors.push_back(std::move(x));
        } else if (kw == "end") {
            if (open_subspace.empty()) throw ParseError(ln, "end without subspace");
            subspaces.emplace(open_subspace, Subspace::span(algebra, open_vectors));
            subspace_lines.emplace(open_subspace, open_subspace_line);
            open_subspace.clear();
            open_vectors.clear();
        } else {
            throw ParseError(ln, "malformed line: unknown keyword '" + kw + "'");
        }
    }
    if (!algebra) throw ParseError(int(lines.size()), "missing algebra line");
    if (!open_subspace.empty())
        throw ParseError(int(lines.size()),
                         "unterminated subspace block '" + open_subspace + "'");

    AlgebraFile f;
    f.algebra = algebra;
    f.subspaces = std::move(subspaces);
    f.associative = algebra->is_associative();
    return f;
}

std::string render_algebra_file(const AlgebraFile& f) {
    const Algebra& a = *f.algebra;
    std::ostringstream out;
    out << "algebra " << a.name() << " p=" << a.p() << " dim=" << a.dim() << "\n";
    if (!a.labels().empty()) {
        out << "basis";
        for (const std::string& l : a.labels()) out << " " << l;
        out << "\n";
    }
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& [k, v] : a.sc_row(i, j))
                out << "sc " << i + 1 << " " << j + 1 << " " << k + 1 << " " << v
                    << "\n";
    for (const auto& [name, sub] : f.subspaces) {
        out << "subspace " << name << "\n";
        for (const Element& row : sub.rows()) {
            out << "vec";
            for (uint32_t c : row.coords) out << " " << c;
            out << "\n";
        }
        out << "end\n";
    }
    return out.str();
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_file(buf.str());
}

void save_algebra_file(const AlgebraFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << render_algebra_file(f);
}

}  // namespace sumpi
