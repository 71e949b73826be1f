#include "linalg.hpp"

#include "config.hpp"
#include "error.hpp"

#include <algorithm>
#include <sstream>

namespace varkit {

namespace {

void require_field(Coeff c, const char* op) {
  if (!c.is_field()) fail(Errc::domain_mismatch, std::string(op) + " requires a field domain, got " + c.str());
}

int first_nonzero(const std::vector<Scalar>& v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) return static_cast<int>(j);
  return -1;
}

void axpy(std::vector<Scalar>& dst, const Scalar& factor, const std::vector<Scalar>& src) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += factor * src[j];
}

// Canonical RREF of the given rows; zero rows dropped, pivots 1,
// pivot columns cleared, rows ordered by pivot column.
std::vector<std::vector<Scalar>> rref_rows(std::vector<std::vector<Scalar>> rows, int cols) {
  int r = 0;
  int n = static_cast<int>(rows.size());
  for (int c = 0; c < cols && r < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (!rows[i][c].is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = -rows[i][c];
      axpy(rows[i], f, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// Unique row-style HNF of the integer row lattice.
std::vector<std::vector<Scalar>> hnf_rows(std::vector<std::vector<Scalar>> rows, int cols) {
  int n = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < cols && r < n; ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < n; ++i) {
        if (rows[i][c].is_zero()) continue;
        if (best < 0 || cmp(abs(rows[i][c].int_value()), abs(rows[best][c].int_value())) < 0) best = i;
      }
      if (best < 0) break;
      std::swap(rows[r], rows[best]);
      if (rows[r][c].int_value() < 0)
        for (auto& x : rows[r]) x = -x;
      bool clean = true;
      const mpz_class& piv = rows[r][c].int_value();
      for (int i = r + 1; i < n; ++i) {
        if (rows[i][c].is_zero()) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].int_value().get_mpz_t(), piv.get_mpz_t());
        axpy(rows[i], Scalar::integer(-q), rows[r]);
        if (!rows[i][c].is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!rows[r][c].is_zero()) {
      const mpz_class piv = rows[r][c].int_value();
      for (int i = 0; i < r; ++i) {
        if (rows[i][c].is_zero()) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].int_value().get_mpz_t(), piv.get_mpz_t());
        axpy(rows[i], Scalar::integer(-q), rows[r]);
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

} // namespace

DenseMatrix::DenseMatrix(int rows, int cols, Coeff c) : rows_(rows), cols_(cols), coeff_(c) {
  if (rows < 0 || cols < 0) fail(Errc::invalid, "negative matrix size");
  if (rows > config().max_ambient || cols > config().max_ambient)
    fail(Errc::resource_cap, "matrix size exceeds ambient cap of " + std::to_string(config().max_ambient));
  entries_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(c));
}

DenseMatrix DenseMatrix::identity(int n, Coeff c) {
  DenseMatrix m(n, n, c);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(c);
  return m;
}

DenseMatrix DenseMatrix::from_rows(Coeff c, const std::vector<std::vector<Scalar>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  DenseMatrix m(nr, nc, c);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) fail(Errc::invalid, "ragged rows");
    for (int j = 0; j < nc; ++j) {
      if (rows[i][j].coeff() != c) fail(Errc::domain_mismatch, "entry domain differs from matrix domain");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<Scalar> DenseMatrix::row(int i) const {
  return std::vector<Scalar>(entries_.begin() + static_cast<std::size_t>(i) * cols_,
                             entries_.begin() + static_cast<std::size_t>(i + 1) * cols_);
}

void DenseMatrix::check_compatible(const DenseMatrix& o, bool same_shape) const {
  if (coeff_ != o.coeff_)
    fail(Errc::domain_mismatch, "matrix domains differ: " + coeff_.str() + " vs " + o.coeff_.str());
  if (same_shape && (rows_ != o.rows_ || cols_ != o.cols_)) fail(Errc::invalid, "matrix shapes differ");
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  check_compatible(o, true);
  DenseMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  check_compatible(o, true);
  DenseMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  check_compatible(o, false);
  if (cols_ != o.rows_) fail(Errc::invalid, "inner dimensions differ");
  DenseMatrix r(rows_, o.cols_, coeff_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

DenseMatrix DenseMatrix::scaled(const Scalar& s) const {
  DenseMatrix r = *this;
  for (auto& x : r.entries_) x *= s;
  return r;
}

DenseMatrix DenseMatrix::inverse() const {
  require_field(coeff_, "matrix inverse");
  if (rows_ != cols_) fail(Errc::invalid, "inverse of non-square matrix");
  int n = rows_;
  // Gauss-Jordan on [A | I].
  std::vector<std::vector<Scalar>> aug(n);
  for (int i = 0; i < n; ++i) {
    aug[i] = row(i);
    for (int j = 0; j < n; ++j) aug[i].push_back(Scalar::of_int(i == j ? 1 : 0, coeff_));
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!aug[i][c].is_zero()) { pivot = i; break; }
    if (pivot < 0) fail(Errc::invalid, "matrix is singular");
    std::swap(aug[c], aug[pivot]);
    Scalar inv = aug[c][c].inverse();
    for (auto& x : aug[c]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || aug[i][c].is_zero()) continue;
      Scalar f = -aug[i][c];
      axpy(aug[i], f, aug[c]);
    }
  }
  DenseMatrix r(n, n, coeff_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug[i][n + j];
  return r;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool DenseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && coeff_ == o.coeff_ && entries_ == o.entries_;
}

bool DenseMatrix::operator<(const DenseMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == o.entries_[i]) continue;
    return entries_[i] < o.entries_[i];
  }
  return false;
}

DenseMatrix DenseMatrix::to(Coeff target) const {
  DenseMatrix r(rows_, cols_, target);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].to(target);
  return r;
}

DenseMatrix DenseMatrix::unflatten(int rows, int cols, Coeff c, const std::vector<Scalar>& v) {
  if (static_cast<std::size_t>(rows) * cols != v.size()) fail(Errc::invalid, "flatten size mismatch");
  DenseMatrix m(rows, cols, c);
  m.entries_ = v;
  return m;
}

std::string DenseMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    if (i) os << " ; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).str();
    }
  }
  return os.str();
}

Subspace Subspace::of_rows(const DenseMatrix& m) {
  return m.coeff().is_field() ? rref(m) : hnf(m);
}

Subspace Subspace::zero(int ambient, Coeff c) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = DenseMatrix(0, ambient, c);
  return s;
}

bool Subspace::member(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    fail(Errc::invalid, "vector length " + std::to_string(v.size()) + " does not match ambient dimension " +
                            std::to_string(ambient_));
  std::vector<Scalar> w = v;
  for (auto& x : w)
    if (x.coeff() != coeff()) fail(Errc::domain_mismatch, "vector domain differs from subspace domain");
  if (coeff().is_field()) {
    for (int i = 0; i < basis_.rows(); ++i) {
      int pc = first_nonzero(basis_.row(i));
      if (pc < 0 || w[pc].is_zero()) continue;
      Scalar f = -w[pc];
      axpy(w, f, basis_.row(i));
    }
  } else {
    for (int i = 0; i < basis_.rows(); ++i) {
      auto brow = basis_.row(i);
      int pc = first_nonzero(brow);
      if (pc < 0 || w[pc].is_zero()) continue;
      const mpz_class& piv = brow[pc].int_value();
      if (!mpz_divisible_p(w[pc].int_value().get_mpz_t(), piv.get_mpz_t())) return false;
      mpz_class q = w[pc].int_value() / piv;
      axpy(w, Scalar::integer(-q), brow);
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_ || coeff() != other.coeff()) return false;
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!member(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace rref(const DenseMatrix& m) {
  require_field(m.coeff(), "rref");
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto reduced = rref_rows(std::move(rows), m.cols());
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = reduced.empty() ? DenseMatrix(0, m.cols(), m.coeff()) : DenseMatrix::from_rows(m.coeff(), reduced);
  return s;
}

Subspace hnf(const DenseMatrix& m) {
  if (m.coeff() != Coeff::Z()) fail(Errc::domain_mismatch, "hnf requires integer entries, got " + m.coeff().str());
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto reduced = hnf_rows(std::move(rows), m.cols());
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = reduced.empty() ? DenseMatrix(0, m.cols(), m.coeff()) : DenseMatrix::from_rows(m.coeff(), reduced);
  return s;
}

SpanBuilder::SpanBuilder(int ambient, Coeff c) : ambient_(ambient), coeff_(c) {
  require_field(c, "span builder");
}

bool SpanBuilder::insert(std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != ambient_) fail(Errc::invalid, "row length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v[pivots_[i]].is_zero()) continue;
    Scalar f = -v[pivots_[i]];
    axpy(v, f, rows_[i]);
  }
  int pc = first_nonzero(v);
  if (pc < 0) return false;
  Scalar inv = v[pc].inverse();
  for (auto& x : v) x *= inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][pc].is_zero()) continue;
    Scalar f = -rows_[i][pc];
    axpy(rows_[i], f, v);
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pc);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool SpanBuilder::reduces_to_zero(std::vector<Scalar> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v[pivots_[i]].is_zero()) continue;
    Scalar f = -v[pivots_[i]];
    axpy(v, f, rows_[i]);
  }
  return first_nonzero(v) < 0;
}

Subspace SpanBuilder::subspace() const {
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = rows_.empty() ? DenseMatrix(0, ambient_, coeff_) : DenseMatrix::from_rows(coeff_, rows_);
  return s;
}

LatticeBuilder::LatticeBuilder(int ambient) : ambient_(ambient) {}

bool LatticeBuilder::insert(std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != ambient_) fail(Errc::invalid, "row length mismatch");
  // Reduce against the current HNF; a nonzero remainder changes the lattice.
  for (auto& row : rows_) {
    int pc = first_nonzero(row);
    if (pc < 0 || v[pc].is_zero()) continue;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v[pc].int_value().get_mpz_t(), row[pc].int_value().get_mpz_t());
    axpy(v, Scalar::integer(-q), row);
  }
  if (first_nonzero(v) < 0) return false;
  rows_.push_back(std::move(v));
  rows_ = hnf_rows(std::move(rows_), ambient_);
  return true;
}

int LatticeBuilder::dim() const { return static_cast<int>(rows_.size()); }

Subspace LatticeBuilder::subspace() const {
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = rows_.empty() ? DenseMatrix(0, ambient_, Coeff::Z()) : DenseMatrix::from_rows(Coeff::Z(), rows_);
  return s;
}

} // namespace varkit
