#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumpi/algfile.hpp"
#include "sumpi/bounds.hpp"
#include "sumpi/delta.hpp"
#include "sumpi/symmetric.hpp"
#include "sumpi/theorem.hpp"
#include "sumpi/zoo.hpp"

namespace py = pybind11;
using namespace sumpi;

namespace {

std::vector<Element> to_elements(const std::vector<std::vector<uint32_t>>& raw) {
    std::vector<Element> out;
    out.reserve(raw.size());
    for (const auto& coords : raw) out.push_back(Element{coords});
    return out;
}

}  // namespace

PYBIND11_MODULE(_sumpi, m) {
    m.doc() = "identity laboratory for structure-constant algebras over F_p";

    py::register_exception<BudgetError>(m, "BudgetError");
    py::register_exception<ParseError>(m, "AlgebraParseError");

    py::class_<Element>(m, "Element")
        .def(py::init([](std::vector<uint32_t> coords) { return Element{std::move(coords)}; }))
        .def_readonly("coords", &Element::coords)
        .def("is_zero", &Element::is_zero)
        .def(py::self == py::self)
        .def("__repr__", [](const Element& e) {
            std::string out = "Element([";
            for (size_t i = 0; i < e.coords.size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(e.coords[i]);
            }
            return out + "])";
        });

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def(py::init<std::string, uint32_t, int, std::vector<std::string>>(),
             py::arg("name"), py::arg("p"), py::arg("dim"),
             py::arg("basis_labels") = std::vector<std::string>{})
        .def_property_readonly("name", &Algebra::name)
        .def_property_readonly("p", &Algebra::p)
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("labels", &Algebra::labels)
        .def("set_sc", &Algebra::set_sc)
        .def("sc", &Algebra::sc)
        .def("zero", &Algebra::zero)
        .def("basis_element", &Algebra::basis_element)
        .def("element", &Algebra::element)
        .def("add", &Algebra::add)
        .def("sub", &Algebra::sub)
        .def("scale", &Algebra::scale)
        .def("multiply", &Algebra::multiply)
        .def("is_associative", &Algebra::is_associative)
        .def("associativity_witness", &Algebra::associativity_witness)
        .def("format_element", &Algebra::format_element)
        .def(py::self == py::self);

    py::class_<Subspace>(m, "Subspace")
        .def_static("span",
                    [](std::shared_ptr<Algebra> a, const std::vector<Element>& vecs) {
                        return Subspace::span(std::move(a), vecs);
                    })
        .def_static("zero", [](std::shared_ptr<Algebra> a) { return Subspace::zero(std::move(a)); })
        .def_static("full", [](std::shared_ptr<Algebra> a) { return Subspace::full(std::move(a)); })
        .def_property_readonly("dim", &Subspace::dim)
        .def_property_readonly("rows", &Subspace::rows)
        .def("is_zero", &Subspace::is_zero)
        .def("contains", py::overload_cast<const Element&>(&Subspace::contains, py::const_))
        .def("contains_subspace",
             py::overload_cast<const Subspace&>(&Subspace::contains, py::const_))
        .def(py::self == py::self);

    m.def("subspace_sum", &subspace_sum);
    m.def("subspace_product", &subspace_product);
    m.def("product_power", &product_power);
    m.def("codimension", &codimension);
    m.def("is_subalgebra", &is_subalgebra);
    m.def("nilpotency_index",
          [](const Subspace& s, int cap) { return nilpotency_index(s, cap); },
          py::arg("s"), py::arg("cap") = 16);

    py::class_<SumDecomposition>(m, "SumDecomposition")
        .def_readonly("s1", &SumDecomposition::s1)
        .def_readonly("s2", &SumDecomposition::s2);

    py::class_<DecompositionCheck>(m, "DecompositionCheck")
        .def_readonly("ok", &DecompositionCheck::ok)
        .def_readonly("error", &DecompositionCheck::error)
        .def_property_readonly("decomposition",
                               [](const DecompositionCheck& c) { return c.decomposition; });

    m.def("check_sum_decomposition", &check_sum_decomposition);

    py::class_<MonomialTerm>(m, "MonomialTerm")
        .def_readonly("perm", &MonomialTerm::perm)
        .def_readonly("coeff", &MonomialTerm::coeff);

    py::class_<MultilinearPoly>(m, "MultilinearPoly")
        .def_property_readonly("degree", &MultilinearPoly::degree)
        .def_property_readonly("terms", &MultilinearPoly::terms);

    m.def("sym_poly", &sym_poly);
    m.def("commutator_poly", &commutator_poly);
    m.def("commutator_square_poly", &commutator_square_poly);
    m.def("commutator_product_poly", &commutator_product_poly);
    m.def("eval_poly", [](const Algebra& a, const MultilinearPoly& f,
                          const std::vector<Element>& args) {
        return eval_poly(a, f, args);
    });

    py::enum_<Outcome>(m, "Outcome")
        .value("holds", Outcome::holds)
        .value("fails", Outcome::fails)
        .value("budget", Outcome::budget);

    py::class_<Witness>(m, "Witness")
        .def_readonly("indices", &Witness::indices)
        .def_readonly("value", &Witness::value);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("outcome", &IdentityReport::outcome)
        .def_readonly("witness", &IdentityReport::witness)
        .def_readonly("tuples_checked", &IdentityReport::tuples_checked)
        .def_property_readonly("holds", [](const IdentityReport& r) {
            return r.outcome == Outcome::holds;
        });

    m.def("eval_symmetric",
          [](const Algebra& a, const std::vector<Element>& args, uint64_t budget) {
              Budget b(budget);
              return eval_symmetric(a, args, b);
          },
          py::arg("a"), py::arg("args"), py::arg("budget") = Budget::kDefaultLimit);
    m.def("check_identity",
          [](const MultilinearPoly& f, const Subspace& s, uint64_t budget, int threads) {
              Budget b(budget);
              return check_identity(f, s, b, SweepOptions{threads});
          },
          py::arg("f"), py::arg("s"), py::arg("budget") = Budget::kDefaultLimit,
          py::arg("threads") = 1);
    m.def("check_symmetric",
          [](const Subspace& s, int d, uint64_t budget, int threads) {
              Budget b(budget);
              return check_symmetric(s, d, b, SweepOptions{threads});
          },
          py::arg("s"), py::arg("d"), py::arg("budget") = Budget::kDefaultLimit,
          py::arg("threads") = 1);
    m.def("min_symmetric_degree",
          [](const Subspace& s, int d_max, uint64_t budget, int threads) {
              Budget b(budget);
              MinDegreeResult r = min_symmetric_degree(s, d_max, b, SweepOptions{threads});
              if (r.budget_exceeded) throw BudgetError("budget exceeded during degree search");
              return r.degree;
          },
          py::arg("s"), py::arg("d_max") = 12, py::arg("budget") = Budget::kDefaultLimit,
          py::arg("threads") = 1);

    py::class_<BoundParams>(m, "BoundParams")
        .def(py::init([](int d1, int d2, int k, int t1, int t2, uint32_t p, int side) {
                 return BoundParams{d1, d2, k, t1, t2, p, side};
             }),
             py::arg("d1"), py::arg("d2"), py::arg("k"), py::arg("t1") = 0,
             py::arg("t2") = 0, py::arg("p") = 2, py::arg("side") = 1)
        .def_readwrite("d1", &BoundParams::d1)
        .def_readwrite("d2", &BoundParams::d2)
        .def_readwrite("k", &BoundParams::k)
        .def_readwrite("t1", &BoundParams::t1)
        .def_readwrite("t2", &BoundParams::t2)
        .def_readwrite("p", &BoundParams::p)
        .def_readwrite("side", &BoundParams::side);

    m.def("theorem_bound", &theorem_bound);
    m.def("cor1_bound", &cor1_bound);
    py::class_<FglBound>(m, "FglBound")
        .def_readonly("a", &FglBound::a)
        .def_readonly("log10_bound", &FglBound::log10_bound);
    m.def("fgl_bound", &fgl_bound);
    m.def("repetition_threshold", &repetition_threshold);

    py::class_<Delta>(m, "Delta")
        .def_readonly("parts", &Delta::parts)
        .def_property_readonly("r", &Delta::r)
        .def_property_readonly("s", &Delta::s)
        .def("exceeds", &Delta::exceeds)
        .def("__repr__", [](const Delta& d) {
            std::string out = "Delta(";
            for (size_t i = 0; i < d.parts.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(d.parts[i]);
            }
            return out + ")";
        });

    m.def("enumerate_delta", &enumerate_delta);
    m.def("eval_s_delta",
          [](const SumDecomposition& dec, const Delta& delta,
             const std::vector<std::vector<uint32_t>>& b,
             const std::vector<std::vector<uint32_t>>& c, uint64_t budget) {
              Budget bud(budget);
              return eval_s_delta(dec, delta, to_elements(b), to_elements(c), bud);
          },
          py::arg("dec"), py::arg("delta"), py::arg("b"), py::arg("c"),
          py::arg("budget") = Budget::kDefaultLimit);
    m.def("verify_decomposition",
          [](const SumDecomposition& dec, const std::vector<std::vector<uint32_t>>& b,
             const std::vector<std::vector<uint32_t>>& c, uint64_t budget) {
              Budget bud(budget);
              return verify_decomposition(dec, to_elements(b), to_elements(c), bud);
          },
          py::arg("dec"), py::arg("b"), py::arg("c"),
          py::arg("budget") = Budget::kDefaultLimit);
    m.def("s_delta_vanishing",
          [](const SumDecomposition& dec, int d1, int d2, const Delta& delta,
             int trials, uint64_t seed, uint64_t budget) {
              Budget bud(budget);
              return s_delta_vanishing(dec, d1, d2, delta, trials, seed, bud);
          },
          py::arg("dec"), py::arg("d1"), py::arg("d2"), py::arg("delta"),
          py::arg("trials") = 50, py::arg("seed") = 1,
          py::arg("budget") = Budget::kDefaultLimit);

    py::class_<HypothesisResult>(m, "HypothesisResult")
        .def_readonly("in1", &HypothesisResult::in1)
        .def_readonly("in2", &HypothesisResult::in2)
        .def_readonly("t1", &HypothesisResult::t1)
        .def_readonly("t2", &HypothesisResult::t2)
        .def_readonly("side", &HypothesisResult::side);

    m.def("check_hypothesis", &check_hypothesis, py::arg("dec"), py::arg("k"),
          py::arg("v1"), py::arg("v2"), py::arg("d1") = std::nullopt,
          py::arg("d2") = std::nullopt);

    py::enum_<Tri>(m, "Tri")
        .value("yes", Tri::yes)
        .value("no", Tri::no)
        .value("budget", Tri::budget)
        .value("skipped", Tri::skipped);

    py::class_<TheoremVerdict>(m, "TheoremVerdict")
        .def_readonly("d1", &TheoremVerdict::d1)
        .def_readonly("d2", &TheoremVerdict::d2)
        .def_readonly("bound", &TheoremVerdict::bound)
        .def_readonly("hypothesis_ok", &TheoremVerdict::hypothesis_ok)
        .def_readonly("side", &TheoremVerdict::side)
        .def_readonly("t1", &TheoremVerdict::t1)
        .def_readonly("t2", &TheoremVerdict::t2)
        .def_readonly("identity", &TheoremVerdict::identity)
        .def_readonly("witness", &TheoremVerdict::witness)
        .def_readonly("d_star", &TheoremVerdict::d_star)
        .def_readonly("note", &TheoremVerdict::note);

    m.def("verify_theorem_instance",
          [](const SumDecomposition& dec, int k, const Subspace& v1, const Subspace& v2,
             uint64_t budget, int d_max, int threads, bool want_d_star) {
              Budget b(budget);
              VerifyOptions opts;
              opts.d_max = d_max;
              opts.threads = threads;
              opts.want_d_star = want_d_star;
              return verify_theorem_instance(dec, k, v1, v2, b, opts);
          },
          py::arg("dec"), py::arg("k"), py::arg("v1"), py::arg("v2"),
          py::arg("budget") = Budget::kDefaultLimit, py::arg("d_max") = 12,
          py::arg("threads") = 1, py::arg("want_d_star") = false);

    py::class_<AlgebraFile>(m, "AlgebraFile")
        .def_readonly("algebra", &AlgebraFile::algebra)
        .def_readonly("subspaces", &AlgebraFile::subspaces)
        .def_readonly("associative", &AlgebraFile::associative)
        .def("subspace", &AlgebraFile::subspace)
        .def(py::self == py::self);

    m.def("upper_triangular", &zoo::upper_triangular);
    m.def("strictly_upper", &zoo::strictly_upper);
    m.def("diagonal", &zoo::diagonal);
    m.def("full_matrix", &zoo::full_matrix);
    m.def("truncated_poly", &zoo::truncated_poly);
    m.def("direct_sum", &zoo::direct_sum);

    m.def("parse_algebra_file", &parse_algebra_file);
    m.def("render_algebra_file", &render_algebra_file);
    m.def("load_algebra_file", &load_algebra_file);
    m.def("save_algebra_file", &save_algebra_file);
}
