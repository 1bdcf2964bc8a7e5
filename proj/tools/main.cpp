// sumpi: identity laboratory for finite-dimensional algebras over prime
// fields. Checks multilinear identities exhaustively, searches minimal
// symmetric-identity degrees, evaluates sum-decomposition degree bounds and
// verifies them on concrete algebras.
//
// Reports go to stdout as deterministic key-value lines; diagnostics and
// timings go to stderr. Exit codes: 0 success, 1 a check failed (a finding),
// 2 input/usage error, 3 budget exceeded.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumpi/algfile.hpp"
#include "sumpi/bounds.hpp"
#include "sumpi/delta.hpp"
#include "sumpi/rng.hpp"
#include "sumpi/symmetric.hpp"
#include "sumpi/theorem.hpp"
#include "sumpi/zoo.hpp"

namespace {

using namespace sumpi;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

/// Accumulates the report lines so the exit code can be appended last.
struct Report {
    std::vector<std::pair<std::string, std::string>> lines;

    void add(const std::string& key, const std::string& value) {
        lines.push_back({key, value});
    }
    void add(const std::string& key, int64_t value) {
        add(key, std::to_string(value));
    }

    int finish(int exit_code) {
        add("exit", exit_code);
        for (const auto& [k, v] : lines) std::cout << k << ": " << v << "\n";
        return exit_code;
    }
};

struct LoadedFile {
    AlgebraFile file;
    std::string digest;
};

LoadedFile load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return {parse_algebra_file(text), fnv1a_hex(text)};
}

std::string indices_to_string(const std::vector<int>& idx) {
    std::string out;
    for (int i : idx) {
        if (!out.empty()) out += " ";
        out += std::to_string(i + 1);  // rows are reported 1-based
    }
    return out;
}

void add_witness(Report& report, const Algebra& a, const Subspace& s,
                 const Witness& w) {
    report.add("witness_indices", indices_to_string(w.indices));
    std::string args;
    for (int i : w.indices) {
        if (!args.empty()) args += " | ";
        args += a.format_element(s.rows()[size_t(i)]);
    }
    report.add("witness_args", args);
    report.add("witness_value", a.format_element(w.value));
}

struct PolySpec {
    std::string text;
    bool symmetric = false;  // use the multiset fast path
    int sym_degree = 0;
    std::optional<MultilinearPoly> poly;
};

PolySpec parse_poly_spec(const std::string& spec) {
    PolySpec out;
    out.text = spec;
    if (spec.rfind("sym:", 0) == 0) {
        int d = std::stoi(spec.substr(4));
        if (d < 1) throw std::invalid_argument("sym degree must be >= 1");
        out.symmetric = true;
        out.sym_degree = d;
    } else if (spec == "comm") {
        out.poly = commutator_poly();
    } else if (spec == "comm2") {
        out.poly = commutator_square_poly();
    } else if (spec.rfind("commprod:", 0) == 0) {
        out.poly = commutator_product_poly(std::stoi(spec.substr(9)));
    } else {
        throw std::invalid_argument(
            "unknown poly spec '" + spec +
            "' (expected sym:<d>, comm, comm2 or commprod:<n>)");
    }
    return out;
}

int cmd_validate(const std::string& path) {
    Report report;
    report.add("command", "validate");
    LoadedFile in = load_input(path);
    report.add("input", path);
    report.add("input_digest", in.digest);
    const Algebra& a = *in.file.algebra;
    report.add("algebra", a.name());
    report.add("p", int64_t(a.p()));
    report.add("dim", a.dim());

    bool all_ok = true;
    auto assoc = a.associativity_witness();
    report.add("associative", assoc ? "no" : "yes");
    if (assoc) {
        all_ok = false;
        report.add("associativity_witness",
                   std::to_string((*assoc)[0] + 1) + " " +
                       std::to_string((*assoc)[1] + 1) + " " +
                       std::to_string((*assoc)[2] + 1));
    }
    for (const auto& [name, sub] : in.file.subspaces) {
        report.add("subspace", name);
        report.add(name + ".dim", sub.dim());
        auto w = closure_witness(sub);
        report.add(name + ".closed", w ? "no" : "yes");
        if (w) {
            all_ok = false;
            report.add(name + ".closure_witness",
                       std::to_string(w->rows[0] + 1) + " " +
                           std::to_string(w->rows[1] + 1) + " -> " +
                           a.format_element(w->value));
        }
    }
    return report.finish(all_ok ? kExitOk : kExitFinding);
}

int cmd_check_identity(const std::string& path, const std::string& space,
                       const std::string& poly_spec, uint64_t budget_limit,
                       int threads) {
    Report report;
    report.add("command", "check-identity");
    LoadedFile in = load_input(path);
    report.add("input", path);
    report.add("input_digest", in.digest);
    report.add("space", space);
    report.add("poly", poly_spec);

    const Subspace& s = in.file.subspace(space);
    PolySpec spec = parse_poly_spec(poly_spec);
    Budget budget(budget_limit);
    SweepOptions opts{threads};
    IdentityReport rep = spec.symmetric
                             ? check_symmetric(s, spec.sym_degree, budget, opts)
                             : check_identity(*spec.poly, s, budget, opts);
    report.add("outcome", outcome_name(rep.outcome));
    report.add("tuples_checked", int64_t(rep.tuples_checked));
    if (rep.witness) add_witness(report, *in.file.algebra, s, *rep.witness);
    int code = rep.outcome == Outcome::holds    ? kExitOk
               : rep.outcome == Outcome::fails  ? kExitFinding
                                                : kExitBudget;
    return report.finish(code);
}

int cmd_min_sym_degree(const std::string& path, const std::string& space,
                       int d_max, uint64_t budget_limit, int threads) {
    Report report;
    report.add("command", "min-sym-degree");
    LoadedFile in = load_input(path);
    report.add("input", path);
    report.add("input_digest", in.digest);
    report.add("space", space);
    report.add("max_degree", d_max);

    Budget budget(budget_limit);
    MinDegreeResult res =
        min_symmetric_degree(in.file.subspace(space), d_max, budget, SweepOptions{threads});
    if (res.budget_exceeded) {
        report.add("degree", "budget");
        return report.finish(kExitBudget);
    }
    report.add("degree", res.degree ? std::to_string(*res.degree) : "none");
    return report.finish(kExitOk);
}

int cmd_bounds_theorem(const BoundParams& bp) {
    Report report;
    report.add("command", "bounds theorem");
    report.add("d1", bp.d1);
    report.add("d2", bp.d2);
    report.add("k", bp.k);
    report.add("t1", bp.t1);
    report.add("t2", bp.t2);
    report.add("p", int64_t(bp.p));
    report.add("side", bp.side);
    report.add("bound", theorem_bound(bp));
    return report.finish(kExitOk);
}

int cmd_bounds_cor1(int d1, int d2, int k, int side) {
    Report report;
    report.add("command", "bounds cor1");
    report.add("d1", d1);
    report.add("d2", d2);
    report.add("k", k);
    report.add("side", side);
    report.add("bound", cor1_bound(d1, d2, k, side));
    return report.finish(kExitOk);
}

int cmd_bounds_fgl(int d, int k) {
    Report report;
    report.add("command", "bounds fgl");
    report.add("d", d);
    report.add("k", k);
    FglBound b = fgl_bound(d, k);
    report.add("a", format_double(b.a));
    report.add("log10_bound", format_double(b.log10_bound));
    return report.finish(kExitOk);
}

int cmd_verify_theorem(const std::string& path, const std::string& a1,
                       const std::string& a2, int k, std::string v1,
                       std::string v2, uint64_t budget_limit, bool want_d_star,
                       int d_max, int threads) {
    Report report;
    report.add("command", "verify-theorem");
    LoadedFile in = load_input(path);
    report.add("input", path);
    report.add("input_digest", in.digest);
    report.add("a1", a1);
    report.add("a2", a2);
    report.add("k", k);
    if (v1.empty()) v1 = a1;
    if (v2.empty()) v2 = a2;
    report.add("v1", v1);
    report.add("v2", v2);

    DecompositionCheck dc = check_sum_decomposition(
        in.file.algebra, in.file.subspace(a1), in.file.subspace(a2));
    if (!dc.ok) {
        report.add("decomposition", dc.error);
        return report.finish(kExitFinding);
    }
    report.add("decomposition", "valid");

    Budget budget(budget_limit);
    VerifyOptions opts;
    opts.d_max = d_max;
    opts.threads = threads;
    opts.want_d_star = want_d_star;
    TheoremVerdict verdict = verify_theorem_instance(
        *dc.decomposition, k, in.file.subspace(v1), in.file.subspace(v2), budget, opts);

    report.add("d1", verdict.d1 ? std::to_string(*verdict.d1) : "none");
    report.add("d2", verdict.d2 ? std::to_string(*verdict.d2) : "none");
    report.add("t1", verdict.t1);
    report.add("t2", verdict.t2);
    report.add("side", verdict.side ? std::to_string(*verdict.side) : "none");
    report.add("hypothesis", verdict.hypothesis_ok ? "holds" : "fails");
    if (verdict.bound) report.add("D", *verdict.bound);
    report.add("identity", tri_name(verdict.identity));
    report.add("tuples_checked", int64_t(verdict.tuples_checked));
    if (verdict.witness)
        add_witness(report, *in.file.algebra, Subspace::full(in.file.algebra),
                    *verdict.witness);
    if (want_d_star)
        report.add("d_star", verdict.d_star ? std::to_string(*verdict.d_star)
                   : verdict.d_star_budget  ? "budget"
                                            : "none");
    if (!verdict.note.empty()) report.add("note", verdict.note);

    int code = kExitOk;
    if (verdict.identity == Tri::budget || verdict.d_star_budget)
        code = kExitBudget;
    else if (!verdict.hypothesis_ok || verdict.identity == Tri::no ||
             (verdict.identity == Tri::skipped))
        code = kExitFinding;
    if (code == kExitFinding) {
        // A finding must be reproducible: emit the exact command line.
        std::string replay = "sumpi verify-theorem " + path + " --a1 " + a1 +
                             " --a2 " + a2 + " --k " + std::to_string(k) +
                             " --v1 " + v1 + " --v2 " + v2 + " --budget " +
                             std::to_string(budget_limit) + " --dmax " +
                             std::to_string(d_max);
        report.add("replay", replay);
    }
    return report.finish(code);
}

int cmd_decompose(const std::string& path, const std::string& a1,
                  const std::string& a2, int r, int s, int tuples,
                  bool exhaustive, uint64_t seed, uint64_t budget_limit) {
    Report report;
    report.add("command", "decompose");
    LoadedFile in = load_input(path);
    report.add("input", path);
    report.add("input_digest", in.digest);
    report.add("a1", a1);
    report.add("a2", a2);
    report.add("r", r);
    report.add("s", s);

    DecompositionCheck dc = check_sum_decomposition(
        in.file.algebra, in.file.subspace(a1), in.file.subspace(a2));
    if (!dc.ok) {
        report.add("decomposition", dc.error);
        return report.finish(kExitFinding);
    }
    report.add("decomposition", "valid");
    const SumDecomposition& dec = *dc.decomposition;

    Budget budget(budget_limit);
    uint64_t checked = 0, failed = 0;
    std::optional<std::string> first_failure;

    auto run_tuple = [&](const std::vector<Element>& b, const std::vector<Element>& c) {
        bool ok = verify_decomposition(dec, b, c, budget);
        ++checked;
        if (!ok) {
            ++failed;
            if (!first_failure) {
                std::string text;
                for (const Element& x : b) text += "[" + dec.algebra->format_element(x) + "] ";
                text += "/";
                for (const Element& x : c) text += " [" + dec.algebra->format_element(x) + "]";
                first_failure = text;
            }
        }
    };

    if (exhaustive) {
        report.add("mode", "exhaustive");
        const int dim1 = dec.s1.dim(), dim2 = dec.s2.dim();
        uint64_t total = sat_mul(sat_pow(uint64_t(dim1), unsigned(r)),
                                 sat_pow(uint64_t(dim2), unsigned(s)));
        std::vector<Element> b(size_t(r), dec.algebra->zero());
        std::vector<Element> c(size_t(s), dec.algebra->zero());
        for (uint64_t t = 0; t < total; ++t) {
            uint64_t rest = t;
            for (int i = r - 1; i >= 0; --i) {
                b[size_t(i)] = dec.s1.rows()[size_t(rest % uint64_t(dim1))];
                rest /= uint64_t(dim1);
            }
            for (int i = s - 1; i >= 0; --i) {
                c[size_t(i)] = dec.s2.rows()[size_t(rest % uint64_t(dim2))];
                rest /= uint64_t(dim2);
            }
            run_tuple(b, c);
        }
    } else {
        report.add("mode", "sampled");
        report.add("seed", int64_t(seed));
        Rng rng(seed);
        std::vector<Element> b(size_t(r), dec.algebra->zero());
        std::vector<Element> c(size_t(s), dec.algebra->zero());
        for (int t = 0; t < tuples; ++t) {
            for (int i = 0; i < r; ++i) b[size_t(i)] = random_element(dec.s1, rng);
            for (int i = 0; i < s; ++i) c[size_t(i)] = random_element(dec.s2, rng);
            run_tuple(b, c);
        }
    }
    report.add("tuples_checked", int64_t(checked));
    report.add("failures", int64_t(failed));
    if (first_failure) report.add("first_failure", *first_failure);
    report.add("outcome", failed == 0 ? "holds" : "fails");
    return report.finish(failed == 0 ? kExitOk : kExitFinding);
}

int cmd_zoo(const std::string& kind, int n, int m, uint32_t p,
            const std::string& f1, const std::string& f2,
            const std::string& out_path) {
    Report report;
    report.add("command", "zoo");
    report.add("kind", kind);

    AlgebraFile file;
    if (kind == "upper_triangular") {
        file = zoo::upper_triangular(n, p);
    } else if (kind == "strictly_upper") {
        file = zoo::strictly_upper(n, p);
    } else if (kind == "diagonal") {
        file = zoo::diagonal(n, p);
    } else if (kind == "full_matrix") {
        file = zoo::full_matrix(n, p);
    } else if (kind == "truncated_poly") {
        file = zoo::truncated_poly(m, p);
    } else if (kind == "direct_sum") {
        if (f1.empty() || f2.empty())
            throw std::invalid_argument("direct_sum requires --f1 and --f2");
        file = zoo::direct_sum(load_input(f1).file, load_input(f2).file);
    } else {
        throw std::invalid_argument(
            "unknown zoo kind '" + kind +
            "' (expected upper_triangular, strictly_upper, diagonal, "
            "full_matrix, truncated_poly or direct_sum)");
    }

    std::string text = render_algebra_file(file);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << text;
    report.add("algebra", file.algebra->name());
    report.add("dim", file.algebra->dim());
    report.add("output", out_path);
    report.add("output_digest", fnv1a_hex(text));
    return report.finish(kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"identity laboratory for structure-constant algebras over F_p"};
    app.require_subcommand(1);

    std::string file, space, poly_spec, a1, a2, v1, v2, kind, f1, f2, out_path;
    uint64_t budget_limit = Budget::kDefaultLimit;
    uint64_t seed = 1;
    int threads = 1, d_max = 12, k = 1, r = 0, s = 0, tuples = 20;
    int n = 2, m = 2;
    uint32_t p = 2;
    bool want_d_star = false, exhaustive = false;
    BoundParams bp;
    int fgl_d = 2, fgl_k = 1;

    auto* validate = app.add_subcommand("validate", "check associativity and subspace closure");
    validate->add_option("file", file)->required();

    auto* check = app.add_subcommand("check-identity", "check a multilinear identity on a subspace");
    check->add_option("file", file)->required();
    check->add_option("--space", space)->required();
    check->add_option("--poly", poly_spec, "sym:<d> | comm | comm2 | commprod:<n>")->required();
    check->add_option("--budget", budget_limit);
    check->add_option("--threads", threads);

    auto* minsym = app.add_subcommand("min-sym-degree", "least d with s_d vanishing on a subspace");
    minsym->add_option("file", file)->required();
    minsym->add_option("--space", space)->required();
    minsym->add_option("--max", d_max);
    minsym->add_option("--budget", budget_limit);
    minsym->add_option("--threads", threads);

    auto* bounds = app.add_subcommand("bounds", "evaluate degree-bound formulas");
    bounds->require_subcommand(1);
    auto* bt = bounds->add_subcommand("theorem", "codimension-aware bound");
    bt->add_option("--d1", bp.d1)->required();
    bt->add_option("--d2", bp.d2)->required();
    bt->add_option("--k", bp.k)->required();
    bt->add_option("--t1", bp.t1);
    bt->add_option("--t2", bp.t2);
    bt->add_option("--p", bp.p)->required();
    bt->add_option("--side", bp.side)->required();
    auto* bc = bounds->add_subcommand("cor1", "zero-codimension bound");
    bc->add_option("--d1", bp.d1)->required();
    bc->add_option("--d2", bp.d2)->required();
    bc->add_option("--k", bp.k)->required();
    bc->add_option("--side", bp.side)->required();
    auto* bf = bounds->add_subcommand("fgl", "classical comparison bound (log10)");
    bf->add_option("--d", fgl_d)->required();
    bf->add_option("--k", fgl_k)->required();

    auto* verify = app.add_subcommand("verify-theorem", "full bound verification pipeline");
    verify->add_option("file", file)->required();
    verify->add_option("--a1", a1)->required();
    verify->add_option("--a2", a2)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--v1", v1);
    verify->add_option("--v2", v2);
    verify->add_option("--budget", budget_limit);
    verify->add_flag("--dstar", want_d_star);
    verify->add_option("--dmax", d_max);
    verify->add_option("--threads", threads);

    auto* decomp = app.add_subcommand("decompose", "check the interleaving-block expansion of s_{r+s}");
    decomp->add_option("file", file)->required();
    decomp->add_option("--a1", a1)->required();
    decomp->add_option("--a2", a2)->required();
    decomp->add_option("--r", r)->required();
    decomp->add_option("--s", s)->required();
    decomp->add_option("--tuples", tuples);
    decomp->add_flag("--exhaustive", exhaustive);
    decomp->add_option("--seed", seed);
    decomp->add_option("--budget", budget_limit);

    auto* zoo_cmd = app.add_subcommand("zoo", "emit a standard example algebra file");
    zoo_cmd->add_option("kind", kind)->required();
    zoo_cmd->add_option("--n", n);
    zoo_cmd->add_option("--m", m);
    zoo_cmd->add_option("--p", p);
    zoo_cmd->add_option("--f1", f1);
    zoo_cmd->add_option("--f2", f2);
    zoo_cmd->add_option("-o,--output", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto started = std::chrono::steady_clock::now();
    int code = kExitUsage;
    try {
        if (validate->parsed()) {
            code = cmd_validate(file);
        } else if (check->parsed()) {
            code = cmd_check_identity(file, space, poly_spec, budget_limit, threads);
        } else if (minsym->parsed()) {
            code = cmd_min_sym_degree(file, space, d_max, budget_limit, threads);
        } else if (bounds->parsed()) {
            if (bt->parsed())
                code = cmd_bounds_theorem(bp);
            else if (bc->parsed())
                code = cmd_bounds_cor1(bp.d1, bp.d2, bp.k, bp.side);
            else
                code = cmd_bounds_fgl(fgl_d, fgl_k);
        } else if (verify->parsed()) {
            code = cmd_verify_theorem(file, a1, a2, k, v1, v2, budget_limit,
                                      want_d_star, d_max, threads);
        } else if (decomp->parsed()) {
            code = cmd_decompose(file, a1, a2, r, s, tuples, exhaustive, seed,
                                 budget_limit);
        } else if (zoo_cmd->parsed()) {
            code = cmd_zoo(kind, n, m, p, f1, f2, out_path);
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "# elapsed_ms: " << elapsed << "\n";
    return code;
}
