#pragma once

#include "linalg.hpp"
#include "matrep.hpp"
#include "ncpoly.hpp"

#include <string>
#include <vector>

namespace varkit {

/// Group algebra of an enumerated finite group; elements are coordinate
/// vectors indexed by group-element index, multiplied by Cayley convolution.
class FiniteGroupAlgebra {
public:
  FiniteGroupAlgebra(const FiniteGroupTable& table, Coeff coeff) : table_(&table), coeff_(coeff) {}

  using Vec = std::vector<Scalar>;

  const FiniteGroupTable& table() const { return *table_; }
  Coeff coeff() const { return coeff_; }
  int dim() const { return static_cast<int>(table_->order()); }

  Vec zero() const { return Vec(dim(), Scalar::zero(coeff_)); }
  Vec basis_element(int g) const;
  Vec group_minus_one(int g) const; // e_g - e_identity
  Vec mul(const Vec& a, const Vec& b) const;
  Vec translate(int a, const Vec& v, int b) const; // e_a * v * e_b
  Scalar augmentation(const Vec& v) const;

private:
  const FiniteGroupTable* table_;
  Coeff coeff_;
};

/// Sorted element indices of a verified normal subgroup.
struct SubgroupSet {
  std::vector<int> elems;

  long order() const { return static_cast<long>(elems.size()); }
  bool contains(int g) const;
  bool operator==(const SubgroupSet& o) const { return elems == o.elems; }

  /// Verifies closure, identity, inverses and normality before returning.
  static SubgroupSet verified(const FiniteGroupTable& table, std::vector<int> elems);
};

SubgroupSet subgroup_closure(const FiniteGroupTable& table, const std::vector<int>& seed);
SubgroupSet normal_closure(const FiniteGroupTable& table, const std::vector<int>& seed);
bool quotient_abelian(const FiniteGroupTable& table, const SubgroupSet& normal);

/// n-th power of the augmentation ideal as a canonical subspace (fields) or
/// lattice (Z) of coordinate space K^|G|.
Subspace augmentation_ideal_power(const FiniteGroupAlgebra& alg, int n);

/// D_n = {g : g - 1 in Delta^n} for n = 1..n_max; each term is verified
/// normal and the chain is descending with D_1 = G. Over Z, membership is
/// lattice membership, which is what separates D_n(Z,G) from D_n(Q,G).
std::vector<SubgroupSet> dimension_series(const FiniteGroupAlgebra& alg, int n_max);

/// gamma_1 = G, gamma_{k+1} = normal closure of [gamma_k, G].
std::vector<SubgroupSet> lower_central_series(const FiniteGroupTable& table, int n_max);

/// Smallest two-sided ideal of KG containing every value f(g1..gk) of the
/// multilinear generators at group elements. Fields only; in characteristic
/// p multilinear substitution gives a lower bound, which callers must stamp.
Subspace verbal_ideal(const FiniteGroupAlgebra& alg, const std::vector<NCPolynomial>& generators);

/// Same span with the generator arguments ranging over the given vectors
/// instead of the group elements.
Subspace value_ideal(const FiniteGroupAlgebra& alg, const std::vector<NCPolynomial>& generators,
                     const std::vector<FiniteGroupAlgebra::Vec>& arguments);

/// Kernel of the universal map of G into a quotient algebra satisfying the
/// generators' identities: {g : g - 1 in verbal ideal}.
SubgroupSet dimension_subgroup_sigma(const FiniteGroupAlgebra& alg, const std::vector<NCPolynomial>& generators);

struct SeriesComparison {
  struct Row {
    bool contained; // gs[i] subset of ds[i]
    bool equal;
  };
  std::vector<Row> rows;
  bool all_contained = true;
  bool all_equal = true; // inequality is a reportable finding, not an error
};

SeriesComparison compare_series(const std::vector<SubgroupSet>& ds, const std::vector<SubgroupSet>& gs);

} // namespace varkit
