#pragma once

/* Line-oriented text formats.
 *
 * Algebra file:
 *   # comment
 *   vertices: 1 2 3
 *   arrow a1: 1 -> 2
 *   relations: a1*a2, a2*a3 + 2*a4*a5
 *   char: 2
 * Relation terms compose left to right ("a1*a2" is a1 then a2); integer
 * coefficients and +/- are allowed; `char` is optional and wins over the
 * caller's fallback.
 *
 * Module file:
 *   module over <algebra-file>
 *   dims: 1 0 2
 *   arrow a1: [[0,1],[0,0]]
 * Matrices are row-major, shaped dims[target] x dims[source]; omitted
 * arrows mean zero matrices; `[]` is the matrix with no rows.
 *
 * Parse failures throw ParseError carrying 1-based line and column. */

#include <string>

#include "gorhom/algebra.h"
#include "gorhom/representation.h"

namespace gorhom {

struct ParsedAlgebra {
    Quiver quiver;
    std::vector<PathSum> relations; // coefficients reduced mod characteristic
    uint32_t characteristic = 2;
    bool char_from_file = false;
};

ParsedAlgebra parse_algebra_text(const std::string& text, uint32_t fallback_char = 2);

AlgebraPtr load_algebra_file(const std::string& path, uint32_t fallback_char = 2,
                             int length_cap = 64);

/* The <algebra-file> reference in the header line, verbatim. */
std::string module_algebra_ref(const std::string& text);

/* Parse against an already-built algebra; the header reference is not
 * resolved here. */
Representation parse_module_text(const std::string& text, AlgebraPtr algebra);

/* Resolve the header reference relative to the module file's directory. */
Representation load_module_file(const std::string& path, uint32_t fallback_char = 2,
                                int length_cap = 64);
Representation load_module_file(const std::string& path, AlgebraPtr algebra);

std::string read_text_file(const std::string& path);

std::string format_algebra(const BoundQuiverAlgebra& alg);
std::string format_module(const Representation& rep, const std::string& algebra_ref);

}  // namespace gorhom
