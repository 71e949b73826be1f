#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "config.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

#include <random>

using namespace varkit;

namespace {

DenseMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.push_back(Scalar::integer(v));
    s.push_back(row);
  }
  return DenseMatrix::from_rows(Coeff::Z(), s);
}

DenseMatrix rat_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.push_back(Scalar::rational(mpq_class(v)));
    s.push_back(row);
  }
  return DenseMatrix::from_rows(Coeff::Q(), s);
}

std::vector<Scalar> int_vec(const std::vector<long>& v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar::integer(x));
  return out;
}

// Bounded-coefficient oracle for membership in the lattice generated by two
// rows; enough for the small fixtures below.
bool brute_in_lattice(const std::vector<long>& v, const std::vector<long>& r1, const std::vector<long>& r2,
                      long bound = 8) {
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b) {
      bool all = true;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (a * r1[i] + b * r2[i] != v[i]) all = false;
      if (all) return true;
    }
  return false;
}

} // namespace

TEST_CASE("scalar normalization and arithmetic") {
  CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
  CHECK(Scalar::rational(-2, -4) == Scalar::rational(1, 2));
  CHECK(Scalar::rational(1, 3) + Scalar::rational(1, 6) == Scalar::rational(1, 2));
  CHECK(Scalar::modp(7, 5) == Scalar::modp(2, 5));
  CHECK(Scalar::modp(-1, 5) == Scalar::modp(4, 5));
  CHECK(Scalar::modp(3, 5) * Scalar::modp(2, 5) == Scalar::modp(1, 5));
  CHECK(Scalar::modp(3, 5).inverse() == Scalar::modp(2, 5));
  CHECK(Scalar::rational(3, 4).inverse() == Scalar::rational(4, 3));
  CHECK(Scalar::integer(-1).inverse() == Scalar::integer(-1));
  CHECK_THROWS_AS(Scalar::integer(2).inverse(), Error);
  CHECK_THROWS_AS(Coeff::Fp(6), Error);
  CHECK_THROWS_AS(Coeff::Fp(1), Error);
  CHECK_THROWS_AS(Scalar::integer(1) + Scalar::rational(1, 2), Error);
  CHECK(Scalar::integer(5).to(Coeff::Fp(3)) == Scalar::modp(2, 3));
  CHECK(Scalar::integer(5).to(Coeff::Q()) == Scalar::rational(mpq_class(5)));
  CHECK_THROWS_AS(Scalar::rational(1, 2).to(Coeff::Fp(3)), Error);
}

TEST_CASE("rref basics") {
  SUBCASE("identity is its own echelon basis") {
    Subspace s = rref(DenseMatrix::identity(3, Coeff::Q()));
    CHECK(s.dim() == 3);
    CHECK(s.basis() == DenseMatrix::identity(3, Coeff::Q()));
  }
  SUBCASE("zero matrix has rank 0") {
    Subspace s = rref(DenseMatrix(2, 4, Coeff::Q()));
    CHECK(s.dim() == 0);
    CHECK(s.ambient() == 4);
  }
  SUBCASE("proportional rows collapse") {
    Subspace s = rref(rat_matrix({{1, 2}, {2, 4}}));
    CHECK(s.dim() == 1);
    CHECK(s.basis() == rat_matrix({{1, 2}}));
  }
  SUBCASE("integer input is the wrong domain") { CHECK_THROWS_AS(rref(int_matrix({{1}})), Error); }
  SUBCASE("works over a prime field") {
    DenseMatrix m(2, 2, Coeff::Fp(2));
    m.at(0, 0) = Scalar::modp(1, 2);
    m.at(0, 1) = Scalar::modp(1, 2);
    m.at(1, 0) = Scalar::modp(1, 2);
    m.at(1, 1) = Scalar::modp(1, 2);
    CHECK(rref(m).dim() == 1);
  }
}

TEST_CASE("hnf basics") {
  CHECK(hnf(int_matrix({{1, 0}, {0, 1}})).basis() == int_matrix({{1, 0}, {0, 1}}));
  CHECK(hnf(int_matrix({{2, 0}, {0, 2}})).basis() == int_matrix({{2, 0}, {0, 2}}));

  SUBCASE("gcd combination with reduction above the pivot") {
    Subspace s = hnf(int_matrix({{2, 0}, {1, 1}}));
    CHECK(s.basis() == int_matrix({{1, 1}, {0, 2}}));
    // Oracle: both generating sets give the same lattice, confirmed by
    // bounded enumeration of integer combinations.
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        std::vector<long> v = {2 * a + b, b};
        CHECK(brute_in_lattice(v, {1, 1}, {0, 2}));
        CHECK(s.member(int_vec(v)));
      }
    CHECK(brute_in_lattice({1, 1}, {2, 0}, {1, 1}));
    CHECK(brute_in_lattice({0, 2}, {2, 0}, {1, 1}));
  }
  SUBCASE("rational input is the wrong domain") {
    CHECK_THROWS_AS(hnf(rat_matrix({{1, 0}})), Error);
  }
  SUBCASE("negative pivots are normalized") {
    CHECK(hnf(int_matrix({{-3, 1}})).basis() == int_matrix({{3, -1}}));
  }
}

TEST_CASE("membership") {
  Subspace lattice = hnf(int_matrix({{2, 0}, {1, 1}}));
  CHECK(lattice.member(int_vec({0, 0})));
  CHECK(lattice.member(int_vec({2, 0}))); // 2*(1,1) - (0,2)
  Subspace two_z2 = hnf(int_matrix({{2, 0}, {0, 2}}));
  CHECK_FALSE(two_z2.member(int_vec({1, 0})));
  CHECK_THROWS_AS(lattice.member(int_vec({1, 2, 3})), Error);

  Subspace plane = rref(rat_matrix({{1, 0, 1}, {0, 1, 1}}));
  CHECK(plane.member({Scalar::rational(2, 1), Scalar::rational(3, 1), Scalar::rational(5, 1)}));
  CHECK_FALSE(plane.member({Scalar::rational(1, 1), Scalar::rational(0, 1), Scalar::rational(0, 1)}));
}

TEST_CASE("rref is idempotent and member is linear (randomized)") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);

    DenseMatrix q = rat_matrix(m);
    Subspace s = rref(q);
    CHECK(rref(s.basis()) == s);

    DenseMatrix z = int_matrix(m);
    Subspace l = hnf(z);
    // hnf(A) and A generate the same lattice.
    for (int i = 0; i < z.rows(); ++i) CHECK(l.member(z.row(i)));
    Subspace l2 = hnf(DenseMatrix::from_rows(
        Coeff::Z(), [&] {
          std::vector<std::vector<Scalar>> all;
          for (int i = 0; i < l.basis().rows(); ++i) all.push_back(l.basis().row(i));
          for (int i = 0; i < z.rows(); ++i) all.push_back(z.row(i));
          return all;
        }()));
    CHECK(l2 == l);

    // rank over Q agrees between the two reductions.
    CHECK(rref(z.to(Coeff::Q())).dim() == l.dim());

    // member(v)+member(w) => member(v+w); over Q also scaling.
    if (l.dim() >= 1) {
      auto v = l.basis().row(0);
      auto w = l.basis().row(l.basis().rows() - 1);
      std::vector<Scalar> sum;
      for (std::size_t i = 0; i < v.size(); ++i) sum.push_back(v[i] + w[i]);
      CHECK(l.member(sum));
    }
    if (s.dim() >= 1) {
      auto v = s.basis().row(0);
      std::vector<Scalar> scaled;
      for (const auto& x : v) scaled.push_back(x * Scalar::rational(7, 3));
      CHECK(s.member(scaled));
    }
  }
}

TEST_CASE("span and lattice builders stay canonical") {
  SpanBuilder span(3, Coeff::Q());
  CHECK(span.insert({Scalar::rational(2, 1), Scalar::rational(0, 1), Scalar::rational(2, 1)}));
  CHECK(span.insert({Scalar::rational(0, 1), Scalar::rational(1, 1), Scalar::rational(1, 1)}));
  CHECK_FALSE(span.insert({Scalar::rational(1, 1), Scalar::rational(1, 1), Scalar::rational(2, 1)}));
  CHECK(span.subspace() == rref(rat_matrix({{2, 0, 2}, {0, 1, 1}, {1, 1, 2}})));

  LatticeBuilder lattice(2);
  CHECK(lattice.insert(int_vec({2, 0})));
  CHECK_FALSE(lattice.insert(int_vec({4, 0})));
  CHECK(lattice.insert(int_vec({1, 1})));
  CHECK(lattice.subspace() == hnf(int_matrix({{2, 0}, {1, 1}})));
}

TEST_CASE("matrix size cap") {
  CHECK_THROWS_AS(DenseMatrix(config().max_ambient + 1, 1, Coeff::Q()), Error);
}

TEST_CASE("matrix inverse over fields") {
  DenseMatrix m = rat_matrix({{1, 1}, {0, 1}});
  CHECK((m * m.inverse()).is_identity());
  CHECK_THROWS_AS(rat_matrix({{1, 1}, {1, 1}}).inverse(), Error);
  CHECK_THROWS_AS(int_matrix({{1}}).inverse(), Error);
}
