#pragma once

#include "scalar.hpp"
#include "word.hpp"

#include <map>
#include <string>

namespace varkit {

/// Finitely supported K-linear combination of free-group words. Zero
/// coefficients are never stored, so equality is map equality.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(Coeff c) : coeff_(c) {}
  static GroupAlgebraElement zero(Coeff c) { return GroupAlgebraElement(c); }
  static GroupAlgebraElement one(Coeff c) { return of_word(Word(), Scalar::one(c)); }
  static GroupAlgebraElement of_word(const Word& w, Scalar coefficient);

  Coeff coeff() const { return coeff_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_generator() const;

  GroupAlgebraElement operator-() const;
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  GroupAlgebraElement scaled(const Scalar& s) const;

  bool operator==(const GroupAlgebraElement& o) const { return coeff_ == o.coeff_ && terms_ == o.terms_; }
  bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

  GroupAlgebraElement to(Coeff target) const; // entry-wise canonical coercion

  std::string str() const;

private:
  Coeff coeff_;
  std::map<Word, Scalar> terms_; // shortlex word order
  void add_term(const Word& w, const Scalar& c);
  friend GroupAlgebraElement fox_derivative(const Word&, int);
};

/// Sum of coefficients; a ring homomorphism onto K.
Scalar augmentation(const GroupAlgebraElement& u);

/// The expanded product (x1 - 1)(x2 - 1)...(xn - 1) over Z: 2^n terms with
/// coefficients +-1. A representation satisfies x o augmentation_product(n)
/// exactly when the module has an invariant series of length n with trivial
/// action on the factors.
GroupAlgebraElement augmentation_product(int n);

/// Free differential calculus: d(x_j)/d(x_i) = delta_ij, d(uv) = du + u dv,
/// d(x_i^-1)/d(x_i) = -x_i^-1. Satisfies w - aug(w) = sum_i dw/dx_i (x_i - 1).
GroupAlgebraElement fox_derivative(const Word& w, int gen);

} // namespace varkit
