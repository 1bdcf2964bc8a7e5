#include <doctest.h>

#include <cstdio>

#include "sumpi/algfile.hpp"

using namespace sumpi;

namespace {

int error_line(const std::string& text) {
    try {
        parse_algebra_file(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_CASE("round trip on the whole zoo") {
    for (const AlgebraFile& f :
         {zoo::upper_triangular(2, 2), zoo::upper_triangular(3, 3),
          zoo::strictly_upper(4, 2), zoo::diagonal(3, 5), zoo::full_matrix(2, 2),
          zoo::truncated_poly(4, 5),
          zoo::direct_sum(zoo::diagonal(2, 2), zoo::strictly_upper(2, 2))}) {
        std::string text = render_algebra_file(f);
        AlgebraFile parsed = parse_algebra_file(text);
        CHECK(parsed == f);
        CHECK(render_algebra_file(parsed) == text);
    }
}

TEST_CASE("comments, blank lines and generator order are normalized away") {
    std::string text =
        "# a 2x2 example\n"
        "algebra demo p=3 dim=2\n"
        "\n"
        "sc 1 1 1 1   # e1*e1 = e1\n"
        "subspace W\n"
        "vec 2 1\n"
        "vec 1 2\n"
        "vec 0 1\n"
        "end\n";
    AlgebraFile f = parse_algebra_file(text);
    CHECK(f.algebra->name() == "demo");
    CHECK(f.algebra->p() == 3);
    CHECK(f.subspace("W").dim() == 2);
    // Canonical rows.
    CHECK(f.subspace("W").rows()[0] == f.algebra->basis_element(0));
    CHECK(f.subspace("W").rows()[1] == f.algebra->basis_element(1));
    CHECK(f.associative);

    AlgebraFile again = parse_algebra_file(render_algebra_file(f));
    CHECK(again == f);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("algebra a p=4 dim=2\n") == 1);
    CHECK(error_line("algebra a p=3 dim=0\n") == 1);
    CHECK(error_line("algebra a p=3 dim=2\nsc 1 1 1 5\n") == 2);
    CHECK(error_line("algebra a p=3 dim=2\nsc 1 1 1 0\n") == 2);
    CHECK(error_line("algebra a p=3 dim=2\nsc 3 1 1 1\n") == 2);
    CHECK(error_line("algebra a p=3 dim=2\nbogus 1\n") == 2);
    CHECK(error_line("algebra a p=3 dim=2\nsubspace W\nvec 1\nend\n") == 3);
    CHECK(error_line("algebra a p=3 dim=2\nsubspace W\nvec 1 1\n") == 4);
    CHECK(error_line("sc 1 1 1 1\n") == 1);
    CHECK(error_line("algebra a p=3 dim=2\nvec 1 1\n") == 2);
    CHECK(error_line("algebra bad-name p=3 dim=2\n") == 1);
}

TEST_CASE("duplicate entries name both lines") {
    std::string dup_sc =
        "algebra a p=3 dim=2\n"
        "sc 1 1 2 1\n"
        "sc 2 2 1 2\n"
        "sc 1 1 2 2\n";
    try {
        parse_algebra_file(dup_sc);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("lines 2 and 4") != std::string::npos);
    }

    std::string dup_sub =
        "algebra a p=3 dim=2\n"
        "subspace W\nend\n"
        "subspace W\nend\n";
    try {
        parse_algebra_file(dup_sub);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("non-associative tables parse with a warning flag") {
    std::string text =
        "algebra weird p=2 dim=2\n"
        "sc 1 1 2 1\n"
        "sc 2 1 1 1\n";  // (e1 e1) e1 = e2 e1 = e1, but e1 (e1 e1) = e1 e2 = 0
    AlgebraFile f = parse_algebra_file(text);
    CHECK_FALSE(f.associative);
}

TEST_CASE("save and load through the filesystem") {
    AlgebraFile f = zoo::upper_triangular(2, 3);
    std::string path = "roundtrip_test_tmp.alg";
    save_algebra_file(f, path);
    AlgebraFile loaded = load_algebra_file(path);
    CHECK(loaded == f);
    std::remove(path.c_str());
    CHECK_THROWS(load_algebra_file("does_not_exist.alg"));
}
