#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "error.hpp"
#include "matrep.hpp"
#include "series.hpp"
#include "word.hpp"

#include <cstdlib>
#include <random>

using namespace varkit;

namespace {

Word x(int i, long e = 1) { return Word::generator(i, e); }

TruncatedSeries one(int k, int d) { return TruncatedSeries::one(k, d); }

Word random_word(std::mt19937_64& rng, int letters, int max_len) {
  Word w;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) w = w * x(1 + static_cast<int>(rng() % letters), (rng() & 1) ? 1 : -1);
  return w;
}

Word random_left_normed(std::mt19937_64& rng, int weight) {
  std::vector<Word> parts;
  parts.push_back(x(1));
  parts.push_back(x(2));
  for (int i = 2; i < weight; ++i) parts.push_back(x(1 + static_cast<int>(rng() % 2)));
  if (rng() & 1) std::swap(parts[0], parts[1]);
  return left_normed_commutator(parts);
}

} // namespace

TEST_CASE("series arithmetic") {
  SUBCASE("telescoping inverse") {
    TruncatedSeries a(1, 2);
    a.add_term({}, Scalar::integer(1));
    a.add_term({1}, Scalar::integer(1));
    TruncatedSeries b(1, 2);
    b.add_term({}, Scalar::integer(1));
    b.add_term({1}, Scalar::integer(-1));
    b.add_term({1, 1}, Scalar::integer(1));
    CHECK(a * b == one(1, 2));
  }
  SUBCASE("one is neutral") {
    TruncatedSeries s(2, 3);
    s.add_term({1, 2}, Scalar::integer(5));
    s.add_term({2}, Scalar::integer(-1));
    CHECK(one(2, 3) * s == s);
    CHECK(s * one(2, 3) == s);
  }
  SUBCASE("letters do not commute") {
    TruncatedSeries a = TruncatedSeries::letter(1, 2, 2);
    TruncatedSeries b = TruncatedSeries::letter(2, 2, 2);
    CHECK(a * b != b * a);
  }
  SUBCASE("truncation discards high degrees") {
    TruncatedSeries a = TruncatedSeries::letter(1, 1, 2);
    CHECK((a * a * a).is_zero());
  }
  SUBCASE("parameter mismatch") {
    CHECK_THROWS_AS(one(1, 2) * one(2, 2), Error);
    CHECK_THROWS_AS(one(2, 2) * one(2, 3), Error);
  }
}

TEST_CASE("magnus embedding basics") {
  CHECK(magnus_embed(Word(), 2, 3) == one(2, 3));

  TruncatedSeries x1 = magnus_embed(x(1), 1, 2);
  TruncatedSeries expected(1, 2);
  expected.add_term({}, Scalar::integer(1));
  expected.add_term({1}, Scalar::integer(1));
  CHECK(x1 == expected);

  SUBCASE("commutator expansion against the direct series oracle") {
    // Multiply the four defining series by hand.
    int d = 2;
    TruncatedSeries g1(2, d), g2(2, d), g1i(2, d), g2i(2, d);
    g1.add_term({}, Scalar::integer(1));
    g1.add_term({1}, Scalar::integer(1));
    g2.add_term({}, Scalar::integer(1));
    g2.add_term({2}, Scalar::integer(1));
    for (int j = 0; j <= d; ++j) {
      Monomial m1(static_cast<std::size_t>(j), 1), m2(static_cast<std::size_t>(j), 2);
      g1i.add_term(m1, Scalar::integer(j % 2 ? -1 : 1));
      g2i.add_term(m2, Scalar::integer(j % 2 ? -1 : 1));
    }
    TruncatedSeries oracle = series_multiply(series_multiply(g1i, g2i), series_multiply(g1, g2));
    CHECK(magnus_embed(commutator(x(1), x(2)), 2, d) == oracle);

    TruncatedSeries frozen(2, d);
    frozen.add_term({}, Scalar::integer(1));
    frozen.add_term({1, 2}, Scalar::integer(1));
    frozen.add_term({2, 1}, Scalar::integer(-1));
    CHECK(oracle == frozen);
  }

  SUBCASE("inverse syllable uses the alternating series") {
    TruncatedSeries s = magnus_embed(x(1, -1), 1, 3);
    TruncatedSeries alt(1, 3);
    alt.add_term({}, Scalar::integer(1));
    alt.add_term({1}, Scalar::integer(-1));
    alt.add_term({1, 1}, Scalar::integer(1));
    alt.add_term({1, 1, 1}, Scalar::integer(-1));
    CHECK(s == alt);
  }

  CHECK_THROWS_AS(magnus_embed(x(3), 2, 2), Error);
}

TEST_CASE("dimension degree") {
  CHECK(dimension_degree(x(1), 2, 3).value == 1);
  CHECK(dimension_degree(commutator(x(1), x(2)), 2, 2).value == 2);

  SUBCASE("weight three commutator via direct truncated multiplication") {
    Word w = left_normed_commutator({x(1), x(2), x(1)});
    TruncatedSeries direct = one(2, 3);
    for (const auto& s : w.syllables()) {
      TruncatedSeries g(2, 3);
      if (s.exp > 0) {
        g.add_term({}, Scalar::integer(1));
        g.add_term({static_cast<int>(s.gen)}, Scalar::integer(1));
      } else {
        for (int j = 0; j <= 3; ++j)
          g.add_term(Monomial(static_cast<std::size_t>(j), s.gen), Scalar::integer(j % 2 ? -1 : 1));
      }
      direct = direct * g;
    }
    TruncatedSeries delta = direct - one(2, 3);
    CHECK_FALSE(delta.is_zero());
    CHECK(static_cast<int>(delta.terms().begin()->first.size()) == 3);

    DimensionDegree deg = dimension_degree(w, 2, 3);
    CHECK(deg.bounded);
    CHECK(deg.value == 3);
  }

  SUBCASE("sentinel when everything vanishes") {
    DimensionDegree deg = dimension_degree(Word(), 2, 4);
    CHECK_FALSE(deg.bounded);
    CHECK(deg.value == 5);
    CHECK(deg.str() == ">=5");
  }
}

TEST_CASE("free dimension subgroup membership") {
  CHECK(in_free_dimension_subgroup(Word(), 1, 2));
  CHECK(in_free_dimension_subgroup(Word(), 5, 2));
  CHECK_FALSE(in_free_dimension_subgroup(x(1), 2, 1));
  CHECK(in_free_dimension_subgroup(commutator(x(1), x(2)), 2, 2));
  CHECK_FALSE(in_free_dimension_subgroup(commutator(x(1), x(2)), 3, 2));
}

TEST_CASE("multiplicativity on random pairs") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 200; ++trial) {
    Word a = random_word(rng, 2, 10);
    Word b = random_word(rng, 2, 10);
    int d = 3;
    CHECK(magnus_embed(a * b, 2, d) == series_multiply(magnus_embed(a, 2, d), magnus_embed(b, 2, d)));
  }
}

TEST_CASE("embedding maps inverses to inverses") {
  std::mt19937_64 rng(90211);
  for (int trial = 0; trial < 60; ++trial) {
    Word a = random_word(rng, 2, 12);
    CHECK(series_multiply(magnus_embed(a, 2, 4), magnus_embed(a.inverse(), 2, 4)) == one(2, 4));
  }
}

TEST_CASE("membership chain is nested") {
  std::mt19937_64 rng(90212);
  for (int trial = 0; trial < 80; ++trial) {
    Word a = random_word(rng, 2, 10);
    for (int n = 1; n <= 4; ++n)
      if (in_free_dimension_subgroup(a, n + 1, 2)) CHECK(in_free_dimension_subgroup(a, n, 2));
  }
}

TEST_CASE("lower central sampling lands in the dimension subgroup") {
  std::mt19937_64 rng(90213);
  for (int n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      Word w = random_left_normed(rng, n) * random_left_normed(rng, n);
      CHECK(in_free_dimension_subgroup(w, n, 2));
    }
}

TEST_CASE("failures are witnessed by unitriangular-type homomorphisms") {
  // One-sided sampling evidence: a word of dimension degree < n maps to a
  // non-identity matrix under some homomorphism into the units
  // {alpha I + strictly upper} over a large prime field.
  const std::int64_t q = 2147483647;
  std::mt19937_64 rng(90214);
  auto random_h_element = [&](int n, Coeff field) {
    DenseMatrix m = DenseMatrix::identity(n, field);
    Scalar alpha = Scalar::modp(1 + static_cast<long>(rng() % (q - 1)), q);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = alpha;
      for (int j = i + 1; j < n; ++j) m.at(i, j) = Scalar::modp(static_cast<long>(rng() % q), q);
    }
    return m;
  };

  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Word w = random_word(rng, 2, 8);
    int n = 2 + static_cast<int>(rng() % 3);
    if (in_free_dimension_subgroup(w, n, 2)) continue;
    ++found;
    // The unit group shape comes from the scalar-plus-nilpotent builder.
    MatrixRepresentation shape = units_of_scalar_plus_nilpotent(n, Coeff::Fp(q), Scalar::integer(2));
    bool separated = false;
    for (int sample = 0; sample < 50 && !separated; ++sample) {
      DenseMatrix img1 = random_h_element(shape.dim(), shape.field());
      DenseMatrix img2 = random_h_element(shape.dim(), shape.field());
      DenseMatrix value = DenseMatrix::identity(shape.dim(), shape.field());
      for (const auto& s : w.syllables()) {
        DenseMatrix base = s.gen == 1 ? img1 : img2;
        if (s.exp < 0) base = base.inverse();
        for (long rep = 0; rep < std::labs(s.exp); ++rep) value = value * base;
      }
      separated = !value.is_identity();
    }
    CHECK(separated);
  }
  CHECK(found >= 10);
}

TEST_CASE("cutoff cap") {
  CHECK_THROWS_AS(magnus_embed(x(1), 2, 9), Error);
  CHECK_THROWS_AS(magnus_embed(x(1), 3, 7), Error);
}
