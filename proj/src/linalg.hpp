#pragma once

#include "scalar.hpp"

#include <string>
#include <vector>

namespace varkit {

class DenseMatrix {
public:
  DenseMatrix() : rows_(0), cols_(0), coeff_(Coeff::Z()) {}
  DenseMatrix(int rows, int cols, Coeff c); // zero-filled
  static DenseMatrix identity(int n, Coeff c);
  static DenseMatrix from_rows(Coeff c, const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Coeff coeff() const { return coeff_; }

  Scalar& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::vector<Scalar> row(int i) const;

  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix scaled(const Scalar& s) const;
  DenseMatrix inverse() const; // fields only; fails on singular input

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const DenseMatrix& o) const;
  bool operator!=(const DenseMatrix& o) const { return !(*this == o); }
  bool operator<(const DenseMatrix& o) const; // total order for container keys

  DenseMatrix to(Coeff target) const; // entry-wise canonical coercion
  std::vector<Scalar> flatten() const { return entries_; }
  static DenseMatrix unflatten(int rows, int cols, Coeff c, const std::vector<Scalar>& v);

  std::string str() const;

private:
  int rows_, cols_;
  Coeff coeff_;
  std::vector<Scalar> entries_;

  void check_compatible(const DenseMatrix& o, bool same_shape) const;
};

/// Row space over a field (unique RREF basis) or integer row lattice
/// (unique row-style HNF basis: pivots positive, entries above a pivot
/// reduced into [0, pivot)).
class Subspace {
public:
  static Subspace of_rows(const DenseMatrix& m);
  static Subspace zero(int ambient, Coeff c);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  Coeff coeff() const { return basis_.coeff(); }
  const DenseMatrix& basis() const { return basis_; }

  bool member(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  int ambient_ = 0;
  DenseMatrix basis_;
  friend class SpanBuilder;
  friend class LatticeBuilder;
  friend Subspace rref(const DenseMatrix&);
  friend Subspace hnf(const DenseMatrix&);
};

Subspace rref(const DenseMatrix& m); // fields only
Subspace hnf(const DenseMatrix& m);  // Z only

/// Incrementally grown row space over a field; the basis is kept in RREF
/// after every insertion, so reads are always canonical.
class SpanBuilder {
public:
  SpanBuilder(int ambient, Coeff c);
  bool insert(std::vector<Scalar> v); // true if the rank grew
  bool reduces_to_zero(std::vector<Scalar> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  Subspace subspace() const;

private:
  int ambient_;
  Coeff coeff_;
  std::vector<std::vector<Scalar>> rows_; // sorted by pivot column, fully reduced
  std::vector<int> pivots_;
};

/// Incrementally grown integer row lattice; a new row outside the current
/// lattice triggers a re-normalization to HNF.
class LatticeBuilder {
public:
  LatticeBuilder(int ambient);
  bool insert(std::vector<Scalar> v);
  int dim() const;
  int ambient() const { return ambient_; }
  Subspace subspace() const;

private:
  int ambient_;
  std::vector<std::vector<Scalar>> rows_; // HNF at all times
};

} // namespace varkit
