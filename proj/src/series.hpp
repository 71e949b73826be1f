#pragma once

#include "scalar.hpp"
#include "word.hpp"

#include <map>
#include <string>
#include <vector>

namespace varkit {

using Monomial = std::vector<int>; // letter indices 1..k; empty = constant term

struct ShortlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative power series in letters a1..ak, truncated at total degree
/// d: arithmetic silently discards every term of higher degree.
class TruncatedSeries {
public:
  TruncatedSeries(int letters, int cutoff, Coeff c = Coeff::Z());
  static TruncatedSeries one(int letters, int cutoff, Coeff c = Coeff::Z());
  static TruncatedSeries letter(int index, int letters, int cutoff, Coeff c = Coeff::Z());

  int letters() const { return letters_; }
  int cutoff() const { return cutoff_; }
  Coeff coeff() const { return coeff_; }
  const std::map<Monomial, Scalar, ShortlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Scalar& s) const;
  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  void add_term(const Monomial& m, const Scalar& c);
  std::string str() const;

private:
  int letters_, cutoff_;
  Coeff coeff_;
  std::map<Monomial, Scalar, ShortlexLess> terms_;
  void check_compatible(const TruncatedSeries& o) const;
};

inline TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

/// Image of a word under x_i -> 1 + a_i, x_i^-1 -> sum_{j<=d} (-1)^j a_i^j.
/// Every generator of w must have index <= letters.
TruncatedSeries magnus_embed(const Word& w, int letters, int cutoff);

/// Minimal total degree of a nonzero term of magnus_embed(w) - 1. When all
/// terms through the cutoff vanish the result is unbounded: value = cutoff+1
/// read as ">= cutoff+1".
struct DimensionDegree {
  int value;
  bool bounded;
  std::string str() const;
};
DimensionDegree dimension_degree(const Word& w, int letters, int cutoff);

/// Whether w lies in the n-th integral dimension subgroup of the free group,
/// equivalently (Magnus, Gruen, Witt) in the n-th lower central term.
bool in_free_dimension_subgroup(const Word& w, int n, int letters);

} // namespace varkit
