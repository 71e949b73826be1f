#pragma once

#include "group_algebra.hpp"
#include "linalg.hpp"
#include "matrep.hpp"
#include "ncpoly.hpp"
#include "scalar.hpp"
#include "word.hpp"

#include <string>
#include <vector>

namespace varkit::textio {

/// "Z", "Q" or "F<p>".
Coeff parse_coeff(const std::string& text);

/// Integer `-12`, rational `3/4`, prime-field residue `2 mod 5`; the value
/// is read into the target domain (residues must match its modulus).
Scalar parse_scalar(const std::string& text, Coeff target);

/// Whitespace-separated generator atoms `x3` / `y3`, optional `^<int>`
/// exponents, and the macro `comm(w1,w2)`; `1` or an empty string is the
/// identity. `x` and `y` name the same generators.
Word parse_word(const std::string& text);

/// Group-algebra expressions: sums and products of scalars, word atoms and
/// parenthesized subexpressions, e.g. `3*x1 x2 - 1/2*x2^-1 + 1` or
/// `(y1-1)(y2-1)`.
GroupAlgebraElement parse_element(const std::string& text, Coeff target);

/// Free-algebra polynomials `x1*x2 - x2*x1` with integer or rational
/// coefficients; `*` is required between variables.
NCPolynomial parse_polynomial(const std::string& text, Coeff field);
std::vector<NCPolynomial> parse_polynomial_list(const std::string& text, Coeff field); // ';'-separated

/// Representation files. kind=matrix carries field=, dim= and `gen` lines
/// (rows separated by ';', entries in scalar syntax); kind=perm carries
/// degree= and `gen` lines with cycle notation, converted to permutation
/// matrices over Q. Lines starting with '#' are comments.
MatrixRepresentation parse_representation(const std::string& text);
std::string format_representation(const MatrixRepresentation& rep);

/// Algebra files: kind=algebra, field=, dim= and `basis` lines.
std::vector<DenseMatrix> parse_algebra(const std::string& text);

} // namespace varkit::textio
