#include "matrep.hpp"

#include "config.hpp"
#include "error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace varkit {

MatrixRepresentation::MatrixRepresentation(int dim, Coeff field) : dim_(dim), field_(field) {
  if (dim < 1) fail(Errc::invalid, "module dimension must be >= 1");
  if (!field.is_field()) fail(Errc::domain_mismatch, "representations are defined over fields, got " + field.str());
}

void MatrixRepresentation::add_generator(DenseMatrix g, std::string label) {
  if (g.rows() != dim_ || g.cols() != dim_) fail(Errc::invalid, "generator size differs from module dimension");
  if (g.coeff() != field_) fail(Errc::domain_mismatch, "generator field differs from representation field");
  DenseMatrix inv = g.inverse(); // fails on singular input
  if (!(g * inv).is_identity()) fail(Errc::invalid, "generator inverse verification failed");
  if (label.empty()) label = "g" + std::to_string(gens_.size() + 1);
  gens_.push_back(std::move(g));
  invs_.push_back(std::move(inv));
  labels_.push_back(std::move(label));
}

MatrixRepresentation ut_natural(int n, Coeff field, const std::vector<Scalar>& lambdas) {
  if (lambdas.empty()) fail(Errc::invalid, "empty coefficient set");
  MatrixRepresentation rep(n, field);
  for (int i = 0; i + 1 < n; ++i)
    for (const auto& lambda : lambdas) {
      DenseMatrix g = DenseMatrix::identity(n, field);
      g.at(i, i + 1) = lambda.to(field);
      rep.add_generator(std::move(g));
    }
  return rep;
}

MatrixRepresentation t_natural(int n, Coeff field, const std::vector<Scalar>& lambdas,
                               const std::vector<Scalar>& diagonal_units) {
  MatrixRepresentation rep = ut_natural(n, field, lambdas);
  for (int i = 0; i < n; ++i)
    for (const auto& delta : diagonal_units) {
      Scalar d = delta.to(field);
      if (d.is_zero()) fail(Errc::invalid, "diagonal unit must be nonzero");
      DenseMatrix g = DenseMatrix::identity(n, field);
      g.at(i, i) = d;
      rep.add_generator(std::move(g));
    }
  return rep;
}

MatrixRepresentation units_of_scalar_plus_nilpotent(int n, Coeff field, const Scalar& scalar_unit) {
  Scalar s = scalar_unit.to(field);
  if (s.is_zero() || s.is_one()) fail(Errc::invalid, "scalar unit must differ from 0 and 1");
  MatrixRepresentation rep = ut_natural(n, field, {Scalar::one(field)});
  rep.add_generator(DenseMatrix::identity(n, field).scaled(s));
  return rep;
}

FiniteGroupTable group_closure(const MatrixRepresentation& rep) {
  FiniteGroupTable table;
  table.generator_count = rep.generator_count();
  std::map<DenseMatrix, int> index;
  DenseMatrix id = DenseMatrix::identity(rep.dim(), rep.field());
  table.elements.push_back(id);
  table.words.push_back({});
  index.emplace(id, 0);
  table.identity = 0;

  // One step multiplies by a generator or a generator inverse, in order.
  std::vector<std::pair<DenseMatrix, int>> steps;
  for (int i = 0; i < rep.generator_count(); ++i) steps.emplace_back(rep.generators()[i], i + 1);
  for (int i = 0; i < rep.generator_count(); ++i) steps.emplace_back(rep.inverses()[i], -(i + 1));

  for (std::size_t head = 0; head < table.elements.size(); ++head) {
    for (const auto& [step, letter] : steps) {
      DenseMatrix next = table.elements[head] * step;
      if (index.count(next)) continue;
      if (static_cast<long>(table.elements.size()) >= config().max_group)
        fail(Errc::resource_cap, "group closure exceeds cap of " + std::to_string(config().max_group));
      index.emplace(next, static_cast<int>(table.elements.size()));
      std::vector<int> word = table.words[head];
      word.push_back(letter);
      table.words.push_back(std::move(word));
      table.elements.push_back(std::move(next));
    }
  }

  long n = table.order();
  if (n * n > 200000000L)
    fail(Errc::resource_cap, "group of order " + std::to_string(n) + " is too large for a Cayley table");
  table.product.assign(n, std::vector<int>(n, 0));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      auto it = index.find(table.elements[a] * table.elements[b]);
      if (it == index.end()) fail(Errc::invalid, "closure is not closed under products");
      table.product[a][b] = it->second;
    }
  table.inverse.assign(n, 0);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (table.product[a][b] == table.identity) {
        table.inverse[a] = static_cast<int>(b);
        break;
      }
  for (const auto& g : rep.generators()) table.generator_elements.push_back(index.at(g));
  return table;
}

Subspace matrix_span(const std::vector<DenseMatrix>& mats, int dim, Coeff field) {
  SpanBuilder span(dim * dim, field);
  for (const auto& m : mats) span.insert(m.flatten());
  return span.subspace();
}

std::vector<DenseMatrix> enveloping_algebra(const MatrixRepresentation& rep) {
  int d = rep.dim();
  std::vector<DenseMatrix> steps = rep.generators();
  steps.insert(steps.end(), rep.inverses().begin(), rep.inverses().end());

  SpanBuilder span(d * d, rep.field());
  std::deque<DenseMatrix> queue;
  auto push = [&](const DenseMatrix& m) {
    if (span.insert(m.flatten())) queue.push_back(m);
  };
  push(DenseMatrix::identity(d, rep.field()));
  // Right-extending words from the identity reaches every word in the
  // generators and inverses, hence spans the whole enveloping algebra.
  while (!queue.empty()) {
    DenseMatrix m = queue.front();
    queue.pop_front();
    for (const auto& s : steps) push(m * s);
  }

  std::vector<DenseMatrix> basis;
  const DenseMatrix& b = span.subspace().basis();
  for (int i = 0; i < b.rows(); ++i) basis.push_back(DenseMatrix::unflatten(d, d, rep.field(), b.row(i)));
  return basis;
}

bool aug_image_nilpotency(const MatrixRepresentation& rep, int n) {
  if (n < 1) fail(Errc::invalid, "nilpotency degree must be >= 1");
  int d = rep.dim();
  DenseMatrix id = DenseMatrix::identity(d, rep.field());
  std::vector<DenseMatrix> seeds;
  for (const auto& g : rep.generators()) seeds.push_back(g - id);
  for (const auto& g : rep.inverses()) seeds.push_back(g - id);

  // W_k spans the products of exactly k seed factors; W_n = 0 iff N^n = 0.
  std::vector<DenseMatrix> layer;
  {
    SpanBuilder span(d * d, rep.field());
    for (const auto& s : seeds)
      if (span.insert(s.flatten())) layer.push_back(s);
  }
  for (int k = 1; k < n && !layer.empty(); ++k) {
    SpanBuilder span(d * d, rep.field());
    std::vector<DenseMatrix> next;
    for (const auto& w : layer)
      for (const auto& s : seeds) {
        DenseMatrix p = w * s;
        if (span.insert(p.flatten())) next.push_back(std::move(p));
      }
    layer = std::move(next);
  }
  return layer.empty();
}

namespace {

// Variables are assigned group elements, so a word evaluates inside the
// group through the Cayley table.
int word_index(const Word& w, const std::map<int, int>& assignment, const FiniteGroupTable& table) {
  int acc = table.identity;
  for (const auto& s : w.syllables()) {
    int g = assignment.at(s.gen);
    int factor = s.exp > 0 ? g : table.inv(g);
    long reps = std::labs(s.exp);
    for (long i = 0; i < reps; ++i) acc = table.mul(acc, factor);
  }
  return acc;
}

std::vector<int> sorted_variables(const std::set<int>& vars) { return {vars.begin(), vars.end()}; }

long checked_assignment_count(long order, std::size_t var_count) {
  long long total = 1;
  for (std::size_t i = 0; i < var_count; ++i) {
    total *= order;
    if (total > config().max_assign)
      fail(Errc::resource_cap, "assignment count exceeds cap of " + std::to_string(config().max_assign));
  }
  return static_cast<long>(total);
}

} // namespace

CheckResult check_action_identity(const MatrixRepresentation& rep, const GroupAlgebraElement& u,
                                  const FiniteGroupTable& table) {
  if (u.is_zero()) return {};
  GroupAlgebraElement v = u.coeff() == rep.field() ? u : u.to(rep.field());
  std::set<int> vars;
  for (const auto& [w, c] : v.terms())
    for (const auto& s : w.syllables()) vars.insert(s.gen);
  std::vector<int> order = sorted_variables(vars);
  checked_assignment_count(table.order(), order.size());

  std::map<int, int> assignment;
  std::vector<int> choice(order.size(), 0);
  long n = table.order();
  for (;;) {
    for (std::size_t i = 0; i < order.size(); ++i) assignment[order[i]] = choice[i];
    DenseMatrix sum(rep.dim(), rep.dim(), rep.field());
    for (const auto& [w, c] : v.terms())
      sum = sum + table.elements[static_cast<std::size_t>(word_index(w, assignment, table))].scaled(c);
    if (!sum.is_zero()) return {false, assignment};
    int pos = static_cast<int>(order.size()) - 1;
    while (pos >= 0 && choice[pos] + 1 == n) choice[pos--] = 0;
    if (pos < 0) break;
    ++choice[pos];
  }
  return {};
}

CheckResult check_polynomial_identity(const MatrixRepresentation& rep, const NCPolynomial& f,
                                      const FiniteGroupTable& table) {
  if (f.is_zero()) return {};
  if (f.field() != rep.field())
    fail(Errc::domain_mismatch, "polynomial field " + f.field().str() + " differs from representation field " +
                                    rep.field().str());
  std::set<int> vars;
  for (const auto& [m, c] : f.terms())
    for (int v : m) vars.insert(v);
  std::vector<int> order = sorted_variables(vars);
  checked_assignment_count(table.order(), order.size());

  std::map<int, int> assignment;
  std::vector<int> choice(order.size(), 0);
  long n = table.order();
  for (;;) {
    for (std::size_t i = 0; i < order.size(); ++i) assignment[order[i]] = choice[i];
    DenseMatrix sum(rep.dim(), rep.dim(), rep.field());
    for (const auto& [m, c] : f.terms()) {
      int acc = table.identity;
      for (int v : m) acc = table.mul(acc, assignment[v]);
      sum = sum + table.elements[static_cast<std::size_t>(acc)].scaled(c);
    }
    if (!sum.is_zero()) return {false, assignment};
    int pos = static_cast<int>(order.size()) - 1;
    while (pos >= 0 && choice[pos] + 1 == n) choice[pos--] = 0;
    if (pos < 0) break;
    ++choice[pos];
  }
  return {};
}

MatrixRepresentation triangular_product(const MatrixRepresentation& rep1, const MatrixRepresentation& rep2,
                                        const std::vector<DenseMatrix>& hom_basis) {
  if (rep1.field() != rep2.field())
    fail(Errc::domain_mismatch,
         "factor fields differ: " + rep1.field().str() + " vs " + rep2.field().str());
  Coeff field = rep1.field();
  int m1 = rep1.dim(), m2 = rep2.dim();

  std::vector<DenseMatrix> corner = hom_basis;
  if (corner.empty())
    for (int i = 0; i < m1; ++i)
      for (int j = 0; j < m2; ++j) {
        DenseMatrix unit(m1, m2, field);
        unit.at(i, j) = Scalar::one(field);
        corner.push_back(std::move(unit));
      }
  for (const auto& phi : corner) {
    if (phi.rows() != m1 || phi.cols() != m2) fail(Errc::invalid, "corner basis shape must be dim(V1) x dim(V2)");
    if (phi.coeff() != field) fail(Errc::domain_mismatch, "corner basis field differs");
  }

  MatrixRepresentation out(m1 + m2, field);
  auto embed = [&](const DenseMatrix* top, const DenseMatrix* bottom, const DenseMatrix* phi) {
    DenseMatrix g = DenseMatrix::identity(m1 + m2, field);
    if (top)
      for (int i = 0; i < m1; ++i)
        for (int j = 0; j < m1; ++j) g.at(i, j) = top->at(i, j);
    if (bottom)
      for (int i = 0; i < m2; ++i)
        for (int j = 0; j < m2; ++j) g.at(m1 + i, m1 + j) = bottom->at(i, j);
    if (phi)
      for (int i = 0; i < m1; ++i)
        for (int j = 0; j < m2; ++j) g.at(i, m1 + j) = phi->at(i, j);
    return g;
  };
  for (int i = 0; i < rep1.generator_count(); ++i)
    out.add_generator(embed(&rep1.generators()[i], nullptr, nullptr), "L" + std::to_string(i + 1));
  for (int i = 0; i < rep2.generator_count(); ++i)
    out.add_generator(embed(nullptr, &rep2.generators()[i], nullptr), "R" + std::to_string(i + 1));
  for (std::size_t i = 0; i < corner.size(); ++i)
    out.add_generator(embed(nullptr, nullptr, &corner[i]), "H" + std::to_string(i + 1));
  return out;
}

std::vector<int> kernel_elements(const MatrixRepresentation& rep, const FiniteGroupTable& table) {
  if (table.generator_count != rep.generator_count())
    fail(Errc::invalid, "table and representation have different generator lists");
  std::vector<int> kernel;
  for (std::size_t e = 0; e < table.elements.size(); ++e) {
    DenseMatrix m = DenseMatrix::identity(rep.dim(), rep.field());
    for (int letter : table.words[e])
      m = m * (letter > 0 ? rep.generators()[letter - 1] : rep.inverses()[-letter - 1]);
    if (m.is_identity()) kernel.push_back(static_cast<int>(e));
  }
  return kernel;
}

} // namespace varkit
