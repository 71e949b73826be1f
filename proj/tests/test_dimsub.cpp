#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimsub.hpp"
#include "error.hpp"
#include "matrep.hpp"
#include "ncpoly.hpp"
#include "textio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace varkit;

namespace {

const Coeff Z = Coeff::Z();
const Coeff Q = Coeff::Q();

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FiniteGroupTable load_table(const std::string& name) {
  return group_closure(textio::parse_representation(read_file(std::string(VARKIT_DATA_DIR) + "/groups/" + name)));
}

NCPolynomial commutator_poly(Coeff field) { return textio::parse_polynomial("x1*x2 - x2*x1", field); }

const std::vector<std::string> kCatalog = {"c2.grp", "c4.grp", "c2c2.grp", "s3.grp",
                                           "d4.grp", "q8.grp", "ut3f2.grp", "a4.grp"};

} // namespace

TEST_CASE("augmentation ideal powers") {
  SUBCASE("trivial group") {
    FiniteGroupTable table = load_table("trivial.grp");
    FiniteGroupAlgebra alg(table, Z);
    for (int n = 1; n <= 3; ++n) CHECK(augmentation_ideal_power(alg, n).dim() == 0);
  }
  SUBCASE("order two, integer coefficients: (g-1)^2 = -2(g-1)") {
    FiniteGroupTable table = load_table("c2.grp");
    FiniteGroupAlgebra alg(table, Z);
    int g = table.identity == 0 ? 1 : 0;
    auto gm1 = alg.group_minus_one(g);
    CHECK(alg.mul(gm1, gm1) == [&] {
      auto v = alg.zero();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = gm1[i] * Scalar::integer(-2);
      return v;
    }());
    Subspace delta2 = augmentation_ideal_power(alg, 2);
    LatticeBuilder expected(2);
    auto doubled = gm1;
    for (auto& xv : doubled) xv *= Scalar::integer(2);
    expected.insert(doubled);
    CHECK(delta2 == expected.subspace());
  }
  SUBCASE("order two, rational coefficients: the chain is stationary") {
    FiniteGroupTable table = load_table("c2.grp");
    FiniteGroupAlgebra alg(table, Q);
    CHECK(augmentation_ideal_power(alg, 2) == augmentation_ideal_power(alg, 1));
  }
  SUBCASE("powers are descending") {
    FiniteGroupTable table = load_table("s3.grp");
    for (Coeff c : {Z, Q}) {
      FiniteGroupAlgebra alg(table, c);
      for (int n = 1; n <= 3; ++n) {
        Subspace outer = augmentation_ideal_power(alg, n);
        Subspace inner = augmentation_ideal_power(alg, n + 1);
        CHECK(outer.contains(inner));
      }
    }
  }
}

TEST_CASE("dimension series") {
  SUBCASE("coefficient sensitivity on the order-two group") {
    FiniteGroupTable table = load_table("c2.grp");
    auto over_z = dimension_series(FiniteGroupAlgebra(table, Z), 2);
    CHECK(over_z[0].order() == 2);
    CHECK(over_z[1].order() == 1);
    auto over_q = dimension_series(FiniteGroupAlgebra(table, Q), 2);
    CHECK(over_q[1].order() == 2);
  }
  SUBCASE("second term over the rationals is the derived subgroup for S3") {
    FiniteGroupTable table = load_table("s3.grp");
    auto ds = dimension_series(FiniteGroupAlgebra(table, Q), 2);
    auto gs = lower_central_series(table, 2);
    CHECK(ds[1].order() == 3);
    CHECK(ds[1] == gs[1]);
  }
  SUBCASE("first term is the whole group") {
    for (const auto& name : kCatalog) {
      FiniteGroupTable table = load_table(name);
      auto ds = dimension_series(FiniteGroupAlgebra(table, Z), 1);
      CHECK(ds[0].order() == table.order());
    }
  }
}

TEST_CASE("lower central series") {
  CHECK(lower_central_series(load_table("c4.grp"), 2)[1].order() == 1);

  FiniteGroupTable s3 = load_table("s3.grp");
  auto gs = lower_central_series(s3, 3);
  CHECK(gs[1].order() == 3);
  CHECK(gs[2] == gs[1]);

  FiniteGroupTable q8 = load_table("q8.grp");
  CHECK(q8.order() == 8);
  auto q8s = lower_central_series(q8, 2);
  CHECK(q8s[1].order() == 2);
}

TEST_CASE("verbal ideals") {
  SUBCASE("commutator values vanish in a commutative group algebra") {
    FiniteGroupTable table = load_table("c4.grp");
    FiniteGroupAlgebra alg(table, Q);
    CHECK(verbal_ideal(alg, {commutator_poly(Q)}).dim() == 0);
  }
  SUBCASE("commutator ideal of S3 has codimension 2") {
    FiniteGroupTable table = load_table("s3.grp");
    FiniteGroupAlgebra alg(table, Q);
    CHECK(verbal_ideal(alg, {commutator_poly(Q)}).dim() == 4);
  }
  SUBCASE("a bare variable generates everything") {
    FiniteGroupTable table = load_table("s3.grp");
    FiniteGroupAlgebra alg(table, Q);
    NCPolynomial x1 = textio::parse_polynomial("x1", Q);
    CHECK(verbal_ideal(alg, {x1}).dim() == 6);
  }
  SUBCASE("integer coefficients are rejected") {
    FiniteGroupTable table = load_table("c2.grp");
    FiniteGroupAlgebra alg(table, Z);
    CHECK_THROWS_AS(verbal_ideal(alg, {commutator_poly(Q)}), Error);
  }
  SUBCASE("non-multilinear generators are rejected") {
    FiniteGroupTable table = load_table("c2.grp");
    FiniteGroupAlgebra alg(table, Q);
    NCPolynomial sq(Q);
    sq.add_term({1, 1}, Scalar::one(Q));
    CHECK_THROWS_AS(verbal_ideal(alg, {sq}), Error);
  }
}

TEST_CASE("nilpotency-type values reproduce the augmentation powers") {
  // Substituting augmentation-ideal generators into the single monomial
  // x1*...*xn and closing up to an ideal recovers Delta^n.
  for (const auto& name : kCatalog) {
    FiniteGroupTable table = load_table(name);
    FiniteGroupAlgebra alg(table, Q);
    std::vector<FiniteGroupAlgebra::Vec> args;
    for (int g = 0; g < table.order(); ++g)
      if (g != table.identity) args.push_back(alg.group_minus_one(g));
    if (args.empty()) continue;
    for (int n = 1; n <= 3; ++n) {
      PolyMonomial mono;
      for (int i = 1; i <= n; ++i) mono.push_back(i);
      NCPolynomial f = NCPolynomial::of_monomial(mono, Scalar::one(Q));
      CHECK(value_ideal(alg, {f}, args) == augmentation_ideal_power(alg, n));
    }
  }
}

TEST_CASE("dimension subgroup for an algebra variety") {
  SUBCASE("commutative identities on S3 cut out the derived subgroup") {
    FiniteGroupTable table = load_table("s3.grp");
    FiniteGroupAlgebra alg(table, Q);
    SubgroupSet d = dimension_subgroup_sigma(alg, {commutator_poly(Q)});
    CHECK(d.order() == 3);
    CHECK(d == lower_central_series(table, 2)[1]);
    CHECK(quotient_abelian(table, d));
  }
  SUBCASE("abelian groups embed into their commutative quotient algebra") {
    FiniteGroupTable table = load_table("c2c2.grp");
    FiniteGroupAlgebra alg(table, Q);
    CHECK(dimension_subgroup_sigma(alg, {commutator_poly(Q)}).order() == 1);
  }
  SUBCASE("a bare variable collapses everything") {
    FiniteGroupTable table = load_table("s3.grp");
    FiniteGroupAlgebra alg(table, Q);
    NCPolynomial x1 = textio::parse_polynomial("x1", Q);
    CHECK(dimension_subgroup_sigma(alg, {x1}).order() == 6);
  }
}

TEST_CASE("series comparison") {
  for (const auto& name : {"s3.grp", "q8.grp"}) {
    FiniteGroupTable table = load_table(name);
    auto ds = dimension_series(FiniteGroupAlgebra(table, Z), 3);
    auto gs = lower_central_series(table, 3);
    SeriesComparison cmp = compare_series(ds, gs);
    CHECK(cmp.all_contained);
    CHECK(cmp.all_equal);
  }
  FiniteGroupTable c2 = load_table("c2.grp");
  CHECK_THROWS_AS(compare_series(dimension_series(FiniteGroupAlgebra(c2, Z), 2),
                                 lower_central_series(c2, 3)),
                  Error);
}

TEST_CASE("descending chains with verified normality") {
  for (const auto& name : kCatalog) {
    FiniteGroupTable table = load_table(name);
    auto ds = dimension_series(FiniteGroupAlgebra(table, Z), 4);
    for (int n = 0; n + 1 < 4; ++n)
      CHECK(std::includes(ds[n].elems.begin(), ds[n].elems.end(), ds[n + 1].elems.begin(), ds[n + 1].elems.end()));
    auto gs = lower_central_series(table, 4);
    SeriesComparison cmp = compare_series(ds, gs);
    CHECK(cmp.all_contained); // gamma_n inside D_n(Z, G), always
  }
}

TEST_CASE("subgroup verification rejects non-normal subsets") {
  FiniteGroupTable s3 = load_table("s3.grp");
  // The cyclic subgroup generated by a transposition is not normal in S3.
  int transposition = -1;
  for (int g = 0; g < s3.order(); ++g)
    if (g != s3.identity && s3.mul(g, g) == s3.identity && lower_central_series(s3, 2)[1].contains(g) == false) {
      transposition = g;
      break;
    }
  REQUIRE(transposition >= 0);
  CHECK_THROWS_AS(SubgroupSet::verified(s3, {s3.identity, transposition}), Error);
  CHECK_THROWS_AS(SubgroupSet::verified(s3, {transposition}), Error);
}
