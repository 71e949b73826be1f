#pragma once

#include "linalg.hpp"
#include "scalar.hpp"
#include "series.hpp"

#include <map>
#include <string>
#include <vector>

namespace varkit {

using PolyMonomial = std::vector<int>; // variable indices >= 1; empty = 1

/// Element of the free associative algebra over a field: finitely many
/// monomials with nonzero coefficients.
class NCPolynomial {
public:
  explicit NCPolynomial(Coeff field);
  static NCPolynomial zero(Coeff field) { return NCPolynomial(field); }
  static NCPolynomial one(Coeff field);
  static NCPolynomial variable(int index, Coeff field);
  static NCPolynomial of_monomial(const PolyMonomial& m, Scalar coefficient);

  Coeff field() const { return field_; }
  const std::map<PolyMonomial, Scalar, ShortlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_variable() const;

  NCPolynomial operator-() const;
  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  NCPolynomial scaled(const Scalar& s) const;

  bool operator==(const NCPolynomial& o) const { return field_ == o.field_ && terms_ == o.terms_; }
  bool operator!=(const NCPolynomial& o) const { return !(*this == o); }

  /// Multilinear on its support: every monomial is a permutation of one
  /// common variable set, each variable appearing exactly once.
  bool is_multilinear() const;
  std::vector<int> support() const; // ascending variable labels

  void add_term(const PolyMonomial& m, const Scalar& c);
  std::string str() const;

private:
  Coeff field_;
  std::map<PolyMonomial, Scalar, ShortlexLess> terms_;
};

/// Variable relabeling x_i -> x_{images[i]}; every occurring variable needs
/// an image and images must be injective on the support.
NCPolynomial rename_variables(const NCPolynomial& f, const std::map<int, int>& images);

/// sum over S_m of sgn(sigma) x_{sigma(1)}...x_{sigma(m)}.
NCPolynomial standard_polynomial(int m, Coeff field = Coeff::Q());

/// Matrix value of f; all variables of f must be assigned square matrices of
/// one size over the field of f.
DenseMatrix evaluate(const NCPolynomial& f, const std::map<int, DenseMatrix>& assignment);

/// Full polarization in characteristic 0: one multilinear polynomial per
/// multihomogeneous component, jointly generating the same T-ideal as f.
/// Fresh variables are numbered after the largest variable in play.
std::vector<NCPolynomial> multilinearize(const NCPolynomial& f);

/// Subspace of the degree-n multilinear component P_n, coordinates indexed
/// by the n! permutations sigma (lex order) via sigma -> x_{sigma(1)}...x_{sigma(n)}.
class MultilinearSpace {
public:
  MultilinearSpace(int degree, Subspace space);
  static MultilinearSpace span(int degree, Coeff field, const std::vector<NCPolynomial>& polys);

  int degree() const { return degree_; }
  Coeff field() const { return space_.coeff(); }
  int dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }
  std::vector<NCPolynomial> basis_polynomials() const;
  bool contains(const NCPolynomial& f) const;
  bool operator==(const MultilinearSpace& o) const { return degree_ == o.degree_ && space_ == o.space_; }
  bool operator!=(const MultilinearSpace& o) const { return !(*this == o); }

private:
  int degree_;
  Subspace space_;
};

/// Coordinates of a multilinear polynomial on variables 1..n in P_n.
std::vector<Scalar> multilinear_coordinates(const NCPolynomial& f, int n);
NCPolynomial polynomial_from_coordinates(const std::vector<Scalar>& coords, int n, Coeff field);

/// All multilinear f of degree n vanishing under every substitution of basis
/// elements; by multilinearity these are exactly the degree-n multilinear
/// identities of the spanned algebra.
MultilinearSpace multilinear_identities(const std::vector<DenseMatrix>& algebra_basis, int n);

/// Degree-n multilinear component of the T-ideal generated by multilinear
/// polynomials: span of m0 * f(m1,...,mk) * m_{k+1} over ordered set
/// partitions of {x1..xn} into possibly empty monomial blocks.
MultilinearSpace t_consequences(const std::vector<NCPolynomial>& generators, int n);

/// Degree-n multilinear component of the ideal product I2 * I1: span of u*v
/// with u a multilinear consequence of gens2 on a nonempty variable block
/// and v one of gens1 on the nonempty complement.
MultilinearSpace tideal_product_component(const std::vector<NCPolynomial>& gens2,
                                          const std::vector<NCPolynomial>& gens1, int n);

} // namespace varkit
