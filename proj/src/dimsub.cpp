#include "dimsub.hpp"

#include "config.hpp"
#include "error.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace varkit {

FiniteGroupAlgebra::Vec FiniteGroupAlgebra::basis_element(int g) const {
  Vec v = zero();
  v[static_cast<std::size_t>(g)] = Scalar::one(coeff_);
  return v;
}

FiniteGroupAlgebra::Vec FiniteGroupAlgebra::group_minus_one(int g) const {
  Vec v = zero();
  v[static_cast<std::size_t>(g)] += Scalar::one(coeff_);
  v[static_cast<std::size_t>(table_->identity)] -= Scalar::one(coeff_);
  return v;
}

FiniteGroupAlgebra::Vec FiniteGroupAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero();
  int n = dim();
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      r[static_cast<std::size_t>(table_->mul(i, j))] += a[i] * b[j];
    }
  }
  return r;
}

FiniteGroupAlgebra::Vec FiniteGroupAlgebra::translate(int a, const Vec& v, int b) const {
  Vec r = zero();
  for (int i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    r[static_cast<std::size_t>(table_->mul(table_->mul(a, i), b))] += v[i];
  }
  return r;
}

Scalar FiniteGroupAlgebra::augmentation(const Vec& v) const {
  Scalar s = Scalar::zero(coeff_);
  for (const auto& x : v) s += x;
  return s;
}

bool SubgroupSet::contains(int g) const { return std::binary_search(elems.begin(), elems.end(), g); }

SubgroupSet SubgroupSet::verified(const FiniteGroupTable& table, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  SubgroupSet s{std::move(elems)};
  if (!s.contains(table.identity)) fail(Errc::invalid, "subgroup does not contain the identity");
  for (int a : s.elems) {
    if (!s.contains(table.inv(a))) fail(Errc::invalid, "subgroup is not closed under inverses");
    for (int b : s.elems)
      if (!s.contains(table.mul(a, b))) fail(Errc::invalid, "subgroup is not closed under products");
  }
  for (int g = 0; g < table.order(); ++g)
    for (int h : s.elems)
      if (!s.contains(table.mul(table.mul(table.inv(g), h), g)))
        fail(Errc::invalid, "subgroup is not normal");
  return s;
}

SubgroupSet subgroup_closure(const FiniteGroupTable& table, const std::vector<int>& seed) {
  std::set<int> elems{table.identity};
  for (int g : seed) elems.insert(g);
  std::vector<int> queue(elems.begin(), elems.end());
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    std::vector<int> found;
    if (!elems.count(table.inv(a))) found.push_back(table.inv(a));
    for (int b : elems) {
      if (!elems.count(table.mul(a, b))) found.push_back(table.mul(a, b));
      if (!elems.count(table.mul(b, a))) found.push_back(table.mul(b, a));
    }
    for (int g : found)
      if (elems.insert(g).second) queue.push_back(g);
  }
  return SubgroupSet{std::vector<int>(elems.begin(), elems.end())};
}

SubgroupSet normal_closure(const FiniteGroupTable& table, const std::vector<int>& seed) {
  std::vector<int> current = seed;
  for (;;) {
    SubgroupSet sub = subgroup_closure(table, current);
    std::vector<int> extended = sub.elems;
    bool grew = false;
    for (int g = 0; g < table.order(); ++g)
      for (int h : sub.elems) {
        int c = table.mul(table.mul(table.inv(g), h), g);
        if (!sub.contains(c)) {
          extended.push_back(c);
          grew = true;
        }
      }
    if (!grew) return sub;
    current = std::move(extended);
  }
}

bool quotient_abelian(const FiniteGroupTable& table, const SubgroupSet& normal) {
  for (int a = 0; a < table.order(); ++a)
    for (int b = a + 1; b < table.order(); ++b)
      if (!normal.contains(table.commutator(a, b))) return false;
  return true;
}

namespace {

// Two-sided saturation by group generators keeps the span an ideal while
// only ever multiplying basis vectors by single elements.
Subspace saturate_ideal(const FiniteGroupAlgebra& alg, std::vector<FiniteGroupAlgebra::Vec> seeds) {
  const FiniteGroupTable& table = alg.table();
  std::vector<int> multipliers = table.generator_elements;
  for (int m : std::vector<int>(multipliers)) multipliers.push_back(table.inv(m));
  std::sort(multipliers.begin(), multipliers.end());
  multipliers.erase(std::unique(multipliers.begin(), multipliers.end()), multipliers.end());

  if (alg.coeff().is_field()) {
    SpanBuilder span(alg.dim(), alg.coeff());
    std::vector<FiniteGroupAlgebra::Vec> queue;
    for (auto& s : seeds)
      if (span.insert(s)) queue.push_back(s);
    while (!queue.empty()) {
      auto v = std::move(queue.back());
      queue.pop_back();
      for (int m : multipliers) {
        auto left = alg.translate(m, v, table.identity);
        if (span.insert(left)) queue.push_back(std::move(left));
        auto right = alg.translate(table.identity, v, m);
        if (span.insert(right)) queue.push_back(std::move(right));
      }
    }
    return span.subspace();
  }
  LatticeBuilder lattice(alg.dim());
  std::vector<FiniteGroupAlgebra::Vec> queue;
  for (auto& s : seeds)
    if (lattice.insert(s)) queue.push_back(s);
  while (!queue.empty()) {
    auto v = std::move(queue.back());
    queue.pop_back();
    for (int m : multipliers) {
      auto left = alg.translate(m, v, table.identity);
      if (lattice.insert(left)) queue.push_back(std::move(left));
      auto right = alg.translate(table.identity, v, m);
      if (lattice.insert(right)) queue.push_back(std::move(right));
    }
  }
  return lattice.subspace();
}

} // namespace

Subspace augmentation_ideal_power(const FiniteGroupAlgebra& alg, int n) {
  if (n < 1) fail(Errc::invalid, "ideal power must be >= 1");
  const FiniteGroupTable& table = alg.table();
  std::vector<FiniteGroupAlgebra::Vec> delta;
  for (int g = 0; g < table.order(); ++g)
    if (g != table.identity) delta.push_back(alg.group_minus_one(g));

  auto reduce = [&](const std::vector<FiniteGroupAlgebra::Vec>& rows) {
    if (alg.coeff().is_field()) {
      SpanBuilder span(alg.dim(), alg.coeff());
      for (const auto& r : rows) span.insert(r);
      return span.subspace();
    }
    LatticeBuilder lattice(alg.dim());
    for (const auto& r : rows) lattice.insert(r);
    return lattice.subspace();
  };

  Subspace power = reduce(delta);
  for (int k = 2; k <= n; ++k) {
    std::vector<FiniteGroupAlgebra::Vec> rows;
    for (int i = 0; i < power.basis().rows(); ++i)
      for (const auto& d : delta) rows.push_back(alg.mul(power.basis().row(i), d));
    power = reduce(rows);
  }
  return power;
}

std::vector<SubgroupSet> dimension_series(const FiniteGroupAlgebra& alg, int n_max) {
  if (n_max < 1) fail(Errc::invalid, "series length must be >= 1");
  const FiniteGroupTable& table = alg.table();
  std::vector<SubgroupSet> out;
  for (int n = 1; n <= n_max; ++n) {
    Subspace power = augmentation_ideal_power(alg, n);
    std::vector<int> elems;
    for (int g = 0; g < table.order(); ++g)
      if (power.member(alg.group_minus_one(g))) elems.push_back(g);
    out.push_back(SubgroupSet::verified(table, std::move(elems)));
    if (n > 1 && !std::includes(out[n - 2].elems.begin(), out[n - 2].elems.end(), out[n - 1].elems.begin(),
                                out[n - 1].elems.end()))
      fail(Errc::invalid, "dimension series is not descending");
  }
  return out;
}

std::vector<SubgroupSet> lower_central_series(const FiniteGroupTable& table, int n_max) {
  if (n_max < 1) fail(Errc::invalid, "series length must be >= 1");
  std::vector<int> all(table.order());
  for (int g = 0; g < table.order(); ++g) all[g] = g;
  std::vector<SubgroupSet> out{SubgroupSet::verified(table, all)};
  for (int n = 2; n <= n_max; ++n) {
    std::vector<int> commutators;
    for (int g : out.back().elems)
      for (int h = 0; h < table.order(); ++h) commutators.push_back(table.commutator(g, h));
    out.push_back(SubgroupSet::verified(table, normal_closure(table, commutators).elems));
  }
  return out;
}

Subspace verbal_ideal(const FiniteGroupAlgebra& alg, const std::vector<NCPolynomial>& generators) {
  std::vector<FiniteGroupAlgebra::Vec> args;
  for (int g = 0; g < alg.table().order(); ++g) args.push_back(alg.basis_element(g));
  return value_ideal(alg, generators, args);
}

Subspace value_ideal(const FiniteGroupAlgebra& alg, const std::vector<NCPolynomial>& generators,
                     const std::vector<FiniteGroupAlgebra::Vec>& arguments) {
  if (!alg.coeff().is_field())
    fail(Errc::domain_mismatch, "verbal ideals are computed over fields, got " + alg.coeff().str());
  if (generators.empty()) fail(Errc::invalid, "no generators given");

  std::vector<FiniteGroupAlgebra::Vec> values;
  for (const auto& raw : generators) {
    if (!raw.is_multilinear() || raw.is_zero())
      fail(Errc::invalid, "verbal-ideal generators must be nonzero multilinear polynomials: " + raw.str());
    std::vector<int> sup = raw.support();
    int arity = static_cast<int>(sup.size());

    long long tuples = 1;
    for (int i = 0; i < arity + 2; ++i) {
      tuples *= static_cast<long long>(arguments.size());
      if (tuples > config().max_assign)
        fail(Errc::resource_cap, "verbal-ideal evaluation exceeds cap of " + std::to_string(config().max_assign));
    }

    std::vector<int> choice(static_cast<std::size_t>(arity), 0);
    for (;;) {
      FiniteGroupAlgebra::Vec value = alg.zero();
      for (const auto& [mono, c] : raw.terms()) {
        FiniteGroupAlgebra::Vec prod = alg.basis_element(alg.table().identity);
        for (int v : mono) {
          int slot = static_cast<int>(std::lower_bound(sup.begin(), sup.end(), v) - sup.begin());
          prod = alg.mul(prod, arguments[static_cast<std::size_t>(choice[slot])]);
        }
        for (std::size_t i = 0; i < prod.size(); ++i) value[i] += prod[i] * c.to(alg.coeff());
      }
      values.push_back(std::move(value));
      int pos = arity - 1;
      while (pos >= 0 && choice[pos] + 1 == static_cast<int>(arguments.size())) choice[pos--] = 0;
      if (pos < 0) break;
      ++choice[pos];
    }
  }
  return saturate_ideal(alg, std::move(values));
}

SubgroupSet dimension_subgroup_sigma(const FiniteGroupAlgebra& alg, const std::vector<NCPolynomial>& generators) {
  Subspace ideal = verbal_ideal(alg, generators);
  std::vector<int> elems;
  for (int g = 0; g < alg.table().order(); ++g)
    if (ideal.member(alg.group_minus_one(g))) elems.push_back(g);
  return SubgroupSet::verified(alg.table(), std::move(elems));
}

SeriesComparison compare_series(const std::vector<SubgroupSet>& ds, const std::vector<SubgroupSet>& gs) {
  if (ds.size() != gs.size()) fail(Errc::invalid, "series lengths differ");
  SeriesComparison cmp;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    bool contained = std::includes(ds[i].elems.begin(), ds[i].elems.end(), gs[i].elems.begin(), gs[i].elems.end());
    bool equal = ds[i] == gs[i];
    cmp.rows.push_back({contained, equal});
    cmp.all_contained = cmp.all_contained && contained;
    cmp.all_equal = cmp.all_equal && equal;
  }
  return cmp;
}

} // namespace varkit
