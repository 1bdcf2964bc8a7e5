#pragma once

#include <stdexcept>
#include <string>

#include "sumpi/zoo.hpp"

namespace sumpi {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

// Line-oriented UTF-8 text format, '#' starts a comment:
//   algebra <name> p=<prime> dim=<n>
//   basis <label_1> ... <label_n>           (optional)
//   sc <i> <j> <k> <v>                      (1-based; e_i e_j contains v e_k)
//   subspace <name> / vec <v_1> ... <v_n> / end
// Omitted sc triples are zero; 0 < v < p; vec entries lie in [0, p).
// A non-associative table parses with the `associative` flag cleared.
AlgebraFile parse_algebra_file(const std::string& text);

// Canonical rendering: sc entries sorted by (i,j,k), subspaces sorted by
// name, vectors in echelon order. parse(render(f)) == f, byte-stably.
std::string render_algebra_file(const AlgebraFile& f);

AlgebraFile load_algebra_file(const std::string& path);
void save_algebra_file(const AlgebraFile& f, const std::string& path);

}  // namespace sumpi
