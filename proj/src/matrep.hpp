#pragma once

#include "group_algebra.hpp"
#include "linalg.hpp"
#include "ncpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace varkit {

/// Generator-presented exact matrix group acting on row vectors from the
/// right: v o g = v * g. Inverses are computed and verified at construction.
class MatrixRepresentation {
public:
  MatrixRepresentation(int dim, Coeff field);

  void add_generator(DenseMatrix g, std::string label = {});

  int dim() const { return dim_; }
  Coeff field() const { return field_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  const std::vector<DenseMatrix>& generators() const { return gens_; }
  const std::vector<DenseMatrix>& inverses() const { return invs_; }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  int dim_;
  Coeff field_;
  std::vector<DenseMatrix> gens_, invs_;
  std::vector<std::string> labels_;
};

/// K^n acted on by the unitriangular group generated by I + lambda*E_{i,i+1}.
MatrixRepresentation ut_natural(int n, Coeff field, const std::vector<Scalar>& lambdas);

/// ut_natural generators plus the diagonal units diag(1,..,delta,..,1) at
/// every position, for delta in diagonal_units.
MatrixRepresentation t_natural(int n, Coeff field, const std::vector<Scalar>& lambdas,
                               const std::vector<Scalar>& diagonal_units);

/// Unitriangular generators together with scalar_unit * I: generates a
/// subgroup of the units {alpha*I + strictly upper triangular, alpha != 0}.
MatrixRepresentation units_of_scalar_plus_nilpotent(int n, Coeff field, const Scalar& scalar_unit);

/// Enumerated finite group: elements in BFS discovery order, Cayley and
/// inverse tables, and one defining word per element over the generators.
struct FiniteGroupTable {
  std::vector<DenseMatrix> elements;
  int identity = 0;
  std::vector<std::vector<int>> product;
  std::vector<int> inverse;
  std::vector<std::vector<int>> words;  // entries +-g, 1-based generator index
  std::vector<int> generator_elements;  // element index of each generator image
  int generator_count = 0;

  long order() const { return static_cast<long>(elements.size()); }
  int mul(int a, int b) const { return product[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
};

/// BFS closure of the generated group; fails with a resource-cap error when
/// the configured group size is exceeded.
FiniteGroupTable group_closure(const MatrixRepresentation& rep);

/// Canonical basis of the smallest subalgebra of m x m matrices containing
/// the identity, the generators and their inverses.
std::vector<DenseMatrix> enveloping_algebra(const MatrixRepresentation& rep);

/// Whether N^n = 0 for N = the multiplicatively closed span of
/// {g - I, g^-1 - I : g generator}; equivalent to the action identity
/// x o (y1-1)...(yn-1) = 0.
bool aug_image_nilpotency(const MatrixRepresentation& rep, int n);

struct CheckResult {
  bool holds = true;
  std::map<int, int> witness; // generator index -> group element index
  explicit operator bool() const { return holds; }
};

/// Exhaustive test of v o u(g1..gk) = 0 over all assignments of group
/// elements to the generators occurring in u. The table must enumerate the
/// representation itself (element matrices are used as values).
CheckResult check_action_identity(const MatrixRepresentation& rep, const GroupAlgebraElement& u,
                                  const FiniteGroupTable& table);

/// Exhaustive test of f(g1..gk) = 0 over all tuples of group elements.
CheckResult check_polynomial_identity(const MatrixRepresentation& rep, const NCPolynomial& f,
                                      const FiniteGroupTable& table);

/// Block-triangular combination of two representations on V1 + V2 with a
/// Hom(V1,V2) corner: generators diag(g1,I), diag(I,g2) and the unipotent
/// blocks [[I,phi],[0,I]] for phi in hom_basis (empty = full matrix-unit
/// basis).
MatrixRepresentation triangular_product(const MatrixRepresentation& rep1, const MatrixRepresentation& rep2,
                                        const std::vector<DenseMatrix>& hom_basis = {});

/// Indices of table elements whose defining word acts as the identity matrix
/// in rep; the table and rep must share the generator list.
std::vector<int> kernel_elements(const MatrixRepresentation& rep, const FiniteGroupTable& table);

/// Canonical subspace spanned by flattened matrices (helper shared by the
/// enveloping-algebra comparisons).
Subspace matrix_span(const std::vector<DenseMatrix>& mats, int dim, Coeff field);

} // namespace varkit
