#include "ncpoly.hpp"

#include "config.hpp"
#include "error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace varkit {

namespace {

void require_field(Coeff c, const char* what) {
  if (!c.is_field()) fail(Errc::domain_mismatch, std::string(what) + " requires a field, got " + c.str());
}

void check_degree_cap(int n) {
  if (n < 1) fail(Errc::invalid, "degree must be >= 1");
  if (n > config().max_degree)
    fail(Errc::resource_cap,
         "degree " + std::to_string(n) + " exceeds cap " + std::to_string(config().max_degree));
}

// Permutations of the given ascending labels, lexicographically ordered,
// plus the inverse lookup used for coordinates.
struct PermIndex {
  std::vector<PolyMonomial> perms;
  std::map<PolyMonomial, int> index;

  explicit PermIndex(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    PolyMonomial p = labels;
    do {
      index.emplace(p, static_cast<int>(perms.size()));
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
};

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Scalar> coordinates_on(const NCPolynomial& f, const PermIndex& pi, Coeff field) {
  std::vector<Scalar> coords(pi.perms.size(), Scalar::zero(field));
  for (const auto& [m, c] : f.terms()) {
    auto it = pi.index.find(m);
    if (it == pi.index.end())
      fail(Errc::invalid, "polynomial is not multilinear on the expected variables: " + f.str());
    coords[static_cast<std::size_t>(it->second)] = c;
  }
  return coords;
}

} // namespace

NCPolynomial::NCPolynomial(Coeff field) : field_(field) { require_field(field, "free-algebra polynomial"); }

NCPolynomial NCPolynomial::one(Coeff field) { return of_monomial({}, Scalar::one(field)); }

NCPolynomial NCPolynomial::variable(int index, Coeff field) {
  if (index < 1) fail(Errc::invalid, "variable index must be >= 1");
  return of_monomial({index}, Scalar::one(field));
}

NCPolynomial NCPolynomial::of_monomial(const PolyMonomial& m, Scalar coefficient) {
  NCPolynomial f(coefficient.coeff());
  f.add_term(m, coefficient);
  return f;
}

void NCPolynomial::add_term(const PolyMonomial& m, const Scalar& c) {
  if (c.coeff() != field_) fail(Errc::domain_mismatch, "coefficient domain differs from polynomial field");
  for (int v : m)
    if (v < 1) fail(Errc::invalid, "variable index must be >= 1");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int NCPolynomial::max_variable() const {
  int mx = 0;
  for (const auto& [m, c] : terms_)
    for (int v : m) mx = std::max(mx, v);
  return mx;
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  if (field_ != o.field_) fail(Errc::domain_mismatch, "polynomial fields differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) { return *this += -o; }

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.field() != b.field()) fail(Errc::domain_mismatch, "polynomial fields differ");
  NCPolynomial r(a.field());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      PolyMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(m, ca * cb);
    }
  return r;
}

NCPolynomial NCPolynomial::scaled(const Scalar& s) const {
  NCPolynomial r(field_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

bool NCPolynomial::is_multilinear() const {
  if (terms_.empty()) return true;
  std::vector<int> sup = terms_.begin()->first;
  std::sort(sup.begin(), sup.end());
  for (std::size_t i = 1; i < sup.size(); ++i)
    if (sup[i] == sup[i - 1]) return false;
  for (const auto& [m, c] : terms_) {
    std::vector<int> s = m;
    std::sort(s.begin(), s.end());
    if (s != sup) return false;
  }
  return true;
}

std::vector<int> NCPolynomial::support() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (int v : m) s.insert(v);
  return std::vector<int>(s.begin(), s.end());
}

std::string NCPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    bool negative = false;
    if (a.coeff().dom == Domain::rational) negative = a.rat_value() < 0;
    if (negative) a = -a;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::ostringstream mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) mono << '*';
      mono << 'x' << m[i];
    }
    if (m.empty())
      os << a.str();
    else if (a.is_one())
      os << mono.str();
    else
      os << a.str() << '*' << mono.str();
  }
  return os.str();
}

NCPolynomial rename_variables(const NCPolynomial& f, const std::map<int, int>& images) {
  std::set<int> used;
  NCPolynomial r(f.field());
  for (const auto& [m, c] : f.terms()) {
    PolyMonomial renamed;
    renamed.reserve(m.size());
    for (int v : m) {
      auto it = images.find(v);
      if (it == images.end()) fail(Errc::invalid, "no image for variable x" + std::to_string(v));
      renamed.push_back(it->second);
    }
    r.add_term(renamed, c);
  }
  for (const auto& [from, to] : images)
    if (!used.insert(to).second) fail(Errc::invalid, "variable renaming is not injective");
  return r;
}

NCPolynomial standard_polynomial(int m, Coeff field) {
  if (m < 1) fail(Errc::invalid, "standard polynomial needs degree >= 1");
  require_field(field, "standard polynomial");
  NCPolynomial f(field);
  PolyMonomial p(m);
  for (int i = 0; i < m; ++i) p[i] = i + 1;
  do {
    f.add_term(p, Scalar::of_int(permutation_sign(p), field));
  } while (std::next_permutation(p.begin(), p.end()));
  return f;
}

DenseMatrix evaluate(const NCPolynomial& f, const std::map<int, DenseMatrix>& assignment) {
  int size = -1;
  for (const auto& [v, mat] : assignment) {
    if (mat.rows() != mat.cols()) fail(Errc::invalid, "assigned matrices must be square");
    if (mat.coeff() != f.field()) fail(Errc::domain_mismatch, "matrix field differs from polynomial field");
    if (size < 0) size = mat.rows();
    if (mat.rows() != size) fail(Errc::invalid, "assigned matrices have mixed sizes");
  }
  if (size < 0) size = 1; // constant polynomial with an empty assignment
  DenseMatrix acc(size, size, f.field());
  for (const auto& [m, c] : f.terms()) {
    DenseMatrix prod = DenseMatrix::identity(size, f.field());
    for (int v : m) {
      auto it = assignment.find(v);
      if (it == assignment.end()) fail(Errc::invalid, "variable x" + std::to_string(v) + " is unassigned");
      prod = prod * it->second;
    }
    acc = acc + prod.scaled(c);
  }
  return acc;
}

std::vector<NCPolynomial> multilinearize(const NCPolynomial& f) {
  if (f.field().characteristic() != 0)
    fail(Errc::unsupported, "polarization is complete only in characteristic 0, got " + f.field().str());
  // Split into multihomogeneous components (terms sharing one degree vector).
  std::map<std::map<int, int>, NCPolynomial> components;
  for (const auto& [m, c] : f.terms()) {
    std::map<int, int> degrees;
    for (int v : m) ++degrees[v];
    auto it = components.find(degrees);
    if (it == components.end()) it = components.emplace(degrees, NCPolynomial(f.field())).first;
    it->second.add_term(m, c);
  }
  int fresh = f.max_variable();
  std::vector<NCPolynomial> out;
  for (auto& [degrees, comp] : components) {
    NCPolynomial g = comp;
    for (;;) {
      // Lowest variable still of degree >= 2, recomputed after each step.
      int target = 0;
      for (const auto& [m, c] : g.terms()) {
        std::map<int, int> d;
        for (int v : m) ++d[v];
        for (const auto& [v, k] : d)
          if (k >= 2 && (target == 0 || v < target)) target = v;
        break; // multihomogeneous: one term determines the degree vector
      }
      if (target == 0) break;
      ++fresh;
      NCPolynomial next(g.field());
      for (const auto& [m, c] : g.terms()) {
        for (std::size_t pos = 0; pos < m.size(); ++pos) {
          if (m[pos] != target) continue;
          PolyMonomial replaced = m;
          replaced[pos] = fresh;
          next.add_term(replaced, c);
        }
      }
      g = next;
    }
    if (!g.is_zero()) out.push_back(g);
  }
  return out;
}

MultilinearSpace::MultilinearSpace(int degree, Subspace space) : degree_(degree), space_(std::move(space)) {
  long fact = 1;
  for (int i = 2; i <= degree; ++i) fact *= i;
  if (space_.ambient() != fact) fail(Errc::invalid, "ambient dimension is not degree!");
}

std::vector<Scalar> multilinear_coordinates(const NCPolynomial& f, int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  PermIndex pi(labels);
  return coordinates_on(f, pi, f.field());
}

NCPolynomial polynomial_from_coordinates(const std::vector<Scalar>& coords, int n, Coeff field) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  PermIndex pi(labels);
  if (coords.size() != pi.perms.size()) fail(Errc::invalid, "coordinate length is not n!");
  NCPolynomial f(field);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(pi.perms[i], coords[i]);
  return f;
}

MultilinearSpace MultilinearSpace::span(int degree, Coeff field, const std::vector<NCPolynomial>& polys) {
  int fact = 1;
  for (int i = 2; i <= degree; ++i) fact *= i;
  SpanBuilder builder(fact, field);
  for (const auto& f : polys) builder.insert(multilinear_coordinates(f, degree));
  return MultilinearSpace(degree, builder.subspace());
}

std::vector<NCPolynomial> MultilinearSpace::basis_polynomials() const {
  std::vector<NCPolynomial> out;
  for (int i = 0; i < space_.basis().rows(); ++i)
    out.push_back(polynomial_from_coordinates(space_.basis().row(i), degree_, space_.coeff()));
  return out;
}

bool MultilinearSpace::contains(const NCPolynomial& f) const {
  return space_.member(multilinear_coordinates(f, degree_));
}

MultilinearSpace multilinear_identities(const std::vector<DenseMatrix>& algebra_basis, int n) {
  check_degree_cap(n);
  if (algebra_basis.empty()) fail(Errc::invalid, "empty algebra basis");
  Coeff field = algebra_basis[0].coeff();
  require_field(field, "identity space");
  int size = algebra_basis[0].rows();
  for (const auto& b : algebra_basis) {
    if (b.rows() != size || b.cols() != size) fail(Errc::invalid, "algebra basis matrices have mixed sizes");
    if (b.coeff() != field) fail(Errc::domain_mismatch, "algebra basis matrices have mixed fields");
  }

  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  PermIndex pi(labels);
  long coords = static_cast<long>(pi.perms.size());

  // Constraint rows, one per (basis tuple, matrix entry), in fixed tuple order.
  SpanBuilder constraints(static_cast<int>(coords), field);
  std::vector<int> tuple(n, 0);
  long count = static_cast<long>(algebra_basis.size());
  for (;;) {
    std::vector<DenseMatrix> products;
    products.reserve(pi.perms.size());
    for (const auto& perm : pi.perms) {
      DenseMatrix prod = DenseMatrix::identity(size, field);
      for (int v : perm) prod = prod * algebra_basis[static_cast<std::size_t>(tuple[v - 1])];
      products.push_back(std::move(prod));
    }
    for (int e = 0; e < size * size; ++e) {
      std::vector<Scalar> row;
      row.reserve(products.size());
      bool nonzero = false;
      for (const auto& prod : products) {
        const Scalar& x = prod.at(e / size, e % size);
        nonzero = nonzero || !x.is_zero();
        row.push_back(x);
      }
      if (nonzero) constraints.insert(std::move(row));
    }
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] + 1 == count) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }

  // Nullspace of the constraint RREF, re-reduced to the canonical basis.
  const DenseMatrix& r = constraints.subspace().basis();
  std::vector<int> pivot_of_col(coords, -1);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < static_cast<int>(coords); ++j)
      if (!r.at(i, j).is_zero()) {
        pivot_of_col[j] = i;
        break;
      }
  SpanBuilder nullspace(static_cast<int>(coords), field);
  for (int j = 0; j < static_cast<int>(coords); ++j) {
    if (pivot_of_col[j] >= 0) continue;
    std::vector<Scalar> v(coords, Scalar::zero(field));
    v[j] = Scalar::one(field);
    for (int c = 0; c < static_cast<int>(coords); ++c)
      if (pivot_of_col[c] >= 0) v[c] = -r.at(pivot_of_col[c], j);
    nullspace.insert(std::move(v));
  }
  return MultilinearSpace(n, nullspace.subspace());
}

namespace {

// Normalize a multilinear generator to variables 1..k, order-preserving.
NCPolynomial normalized_generator(const NCPolynomial& g) {
  if (!g.is_multilinear() || g.is_zero())
    fail(Errc::invalid, "T-ideal generators must be nonzero multilinear polynomials: " + g.str());
  std::vector<int> sup = g.support();
  std::map<int, int> images;
  for (std::size_t i = 0; i < sup.size(); ++i) images[sup[i]] = static_cast<int>(i) + 1;
  return rename_variables(g, images);
}

// Span of m0 * f(m1..mk) * m_{k+1} over ordered partitions of `vars` into
// possibly empty blocks; the result is the multilinear component of the
// generated T-ideal on exactly those variables.
std::vector<NCPolynomial> consequences_on(const std::vector<NCPolynomial>& gens, const std::vector<int>& vars,
                                          Coeff field) {
  int n = static_cast<int>(vars.size());
  PermIndex pi(vars);
  SpanBuilder span(static_cast<int>(pi.perms.size()), field);
  std::set<std::vector<Scalar>> seen;

  for (const auto& raw : gens) {
    if (raw.field() != field) fail(Errc::domain_mismatch, "generator fields differ");
    NCPolynomial f = normalized_generator(raw);
    int arity = static_cast<int>(f.support().size());
    int slots = arity + 2; // m0, m1..mk, m_{k+1}
    for (const auto& order : pi.perms) {
      // Compositions of n into `slots` nonnegative parts become consecutive
      // blocks of `order`.
      std::vector<int> cuts(static_cast<std::size_t>(slots) - 1, 0); // ascending cut positions in [0, n]
      for (;;) {
        std::vector<PolyMonomial> blocks(slots);
        int prev = 0;
        for (int s = 0; s < slots; ++s) {
          int end = s + 1 < slots ? cuts[s] : n;
          for (int t = prev; t < end; ++t) blocks[s].push_back(order[t]);
          prev = end;
        }
        NCPolynomial value(field);
        for (const auto& [mono, c] : f.terms()) {
          PolyMonomial m = blocks[0];
          for (int v : mono) m.insert(m.end(), blocks[v].begin(), blocks[v].end());
          m.insert(m.end(), blocks[slots - 1].begin(), blocks[slots - 1].end());
          value.add_term(m, c);
        }
        if (!value.is_zero()) {
          auto coords = coordinates_on(value, pi, field);
          if (seen.insert(coords).second) span.insert(std::move(coords));
        }
        // next nondecreasing cut vector in [0, n]
        int pos = slots - 2;
        while (pos >= 0 && cuts[pos] == n) --pos;
        if (pos < 0) break;
        int v = cuts[pos] + 1;
        for (int s = pos; s < slots - 1; ++s) cuts[s] = v;
      }
    }
  }

  std::vector<NCPolynomial> basis;
  const DenseMatrix& b = span.subspace().basis();
  for (int i = 0; i < b.rows(); ++i) {
    NCPolynomial f(field);
    auto row = b.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) f.add_term(pi.perms[j], row[j]);
    basis.push_back(std::move(f));
  }
  return basis;
}

Coeff common_field(const std::vector<NCPolynomial>& gens) {
  if (gens.empty()) fail(Errc::invalid, "no generators given");
  return gens[0].field();
}

} // namespace

MultilinearSpace t_consequences(const std::vector<NCPolynomial>& generators, int n) {
  check_degree_cap(n);
  Coeff field = common_field(generators);
  std::vector<int> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = i + 1;
  return MultilinearSpace::span(n, field, consequences_on(generators, vars, field));
}

MultilinearSpace tideal_product_component(const std::vector<NCPolynomial>& gens2,
                                          const std::vector<NCPolynomial>& gens1, int n) {
  check_degree_cap(n);
  Coeff field = common_field(gens2);
  if (common_field(gens1) != field) fail(Errc::domain_mismatch, "generator fields differ");
  std::vector<NCPolynomial> products;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> left, right;
    for (int i = 0; i < n; ++i)
      (mask >> i & 1u ? left : right).push_back(i + 1);
    auto us = consequences_on(gens2, left, field);
    if (us.empty()) continue;
    auto vs = consequences_on(gens1, right, field);
    for (const auto& u : us)
      for (const auto& v : vs) products.push_back(u * v);
  }
  return MultilinearSpace::span(n, field, products);
}

} // namespace varkit
