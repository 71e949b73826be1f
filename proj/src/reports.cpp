#include "reports.hpp"

#include "dimsub.hpp"
#include "error.hpp"
#include "ncpoly.hpp"
#include "textio.hpp"

#include <algorithm>
#include <sstream>

namespace varkit::reports {

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string letter_word(const FiniteGroupTable& table, const std::vector<std::string>& labels, int element) {
  const auto& word = table.words[static_cast<std::size_t>(element)];
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    int letter = word[i];
    os << labels[static_cast<std::size_t>(std::abs(letter)) - 1];
    if (letter < 0) os << "^-1";
  }
  return os.str();
}

void append_witness(std::ostringstream& os, const CheckResult& result, const MatrixRepresentation& rep,
                    const FiniteGroupTable& table, char variable_letter) {
  os << "witness";
  for (const auto& [var, element] : result.witness) os << '\t' << variable_letter << var << '=' << element;
  os << '\n';
  std::vector<int> used;
  for (const auto& [var, element] : result.witness) used.push_back(element);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int e : used) os << "# element " << e << " = " << letter_word(table, rep.labels(), e) << '\n';
}

} // namespace

std::string magnus_expand(const std::string& word_text, int letters, int cutoff) {
  Word w = textio::parse_word(word_text);
  TruncatedSeries s = magnus_embed(w, letters, cutoff);
  std::ostringstream os;
  os << "# verb\tmagnus\n";
  os << "# word\t" << w.str() << '\n';
  os << "# letters\t" << letters << '\n';
  os << "# cutoff\t" << cutoff << '\n';
  os << "term\tcoeff\n";
  for (const auto& [m, c] : s.terms()) {
    if (m.empty()) {
      os << "1\t" << c.str() << '\n';
      continue;
    }
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "*" : "") << 'a' << m[i];
    os << '\t' << c.str() << '\n';
  }
  return os.str();
}

MagnusTest magnus_test(const std::string& word_text, int letters, int cutoff, int test_n) {
  if (test_n < 1) fail(Errc::invalid, "test degree must be >= 1");
  Word w = textio::parse_word(word_text);
  int used_cutoff = std::max(cutoff, test_n);
  MagnusTest out;
  out.degree = dimension_degree(w, letters, used_cutoff);
  out.in_dn = out.degree.value >= test_n;
  std::ostringstream os;
  os << "# verb\tmagnus\n";
  os << "# word\t" << w.str() << '\n';
  os << "# letters\t" << letters << '\n';
  os << "# cutoff\t" << used_cutoff << '\n';
  os << "# test_n\t" << test_n << '\n';
  os << "dimension_degree\t" << out.degree.str() << '\n';
  os << "in_D_n\t" << bool_str(out.in_dn) << '\n';
  out.report = os.str();
  return out;
}

std::string dimsub_report(const MatrixRepresentation& group, Coeff coeff, int nmax, bool with_gamma) {
  if (nmax < 1) fail(Errc::invalid, "nmax must be >= 1");
  FiniteGroupTable table = group_closure(group);
  FiniteGroupAlgebra alg(table, coeff);
  std::vector<SubgroupSet> ds = dimension_series(alg, nmax);

  std::ostringstream os;
  os << "# verb\tdimsub\n";
  os << "# coeff\t" << coeff.str() << '\n';
  os << "# order\t" << table.order() << '\n';
  os << "# nmax\t" << nmax << '\n';
  if (!with_gamma) {
    os << "n\t|D_n|\n";
    for (int n = 1; n <= nmax; ++n) os << n << '\t' << ds[n - 1].order() << '\n';
    return os.str();
  }
  std::vector<SubgroupSet> gs = lower_central_series(table, nmax);
  SeriesComparison cmp = compare_series(ds, gs);
  os << "n\t|gamma_n|\t|D_n|\tcontained\tequal\n";
  for (int n = 1; n <= nmax; ++n)
    os << n << '\t' << gs[n - 1].order() << '\t' << ds[n - 1].order() << '\t'
       << bool_str(cmp.rows[n - 1].contained) << '\t' << bool_str(cmp.rows[n - 1].equal) << '\n';
  for (int n = 1; n <= nmax; ++n)
    if (!cmp.rows[n - 1].equal) os << "# finding\tgamma_" << n << " != D_" << n << '\n';
  return os.str();
}

namespace {

std::string identities_report(const std::vector<DenseMatrix>& basis, int degree, int enveloping_dim) {
  MultilinearSpace space = multilinear_identities(basis, degree);
  std::ostringstream os;
  os << "# verb\tidentities\n";
  os << "# field\t" << basis[0].coeff().str() << '\n';
  os << "# degree\t" << degree << '\n';
  if (enveloping_dim >= 0) os << "enveloping_dim\t" << enveloping_dim << '\n';
  os << "dimension\t" << space.dim() << '\n';
  os << "standard_poly_member\t" << bool_str(space.contains(standard_polynomial(degree, basis[0].coeff())))
     << '\n';
  for (const auto& f : space.basis_polynomials()) os << "basis\t" << f.str() << '\n';
  return os.str();
}

} // namespace

std::string identities_of_algebra(const std::vector<DenseMatrix>& basis, int degree) {
  return identities_report(basis, degree, -1);
}

std::string identities_of_rep(const MatrixRepresentation& rep, int degree) {
  std::vector<DenseMatrix> basis = enveloping_algebra(rep);
  return identities_report(basis, degree, static_cast<int>(basis.size()));
}

CheckOutcome check_identity(const MatrixRepresentation& rep, const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    fail(Errc::parse, "identity spec must be action:<element> or poly:<polynomial>");
  std::string kind = spec.substr(0, colon);
  std::string body = spec.substr(colon + 1);

  FiniteGroupTable table = group_closure(rep);
  std::ostringstream os;
  os << "# verb\tcheck\n";
  os << "# kind\t" << kind << '\n';
  os << "# order\t" << table.order() << '\n';

  CheckOutcome out;
  if (kind == "action") {
    GroupAlgebraElement u = textio::parse_element(body, rep.field());
    CheckResult result = check_action_identity(rep, u, table);
    out.holds = result.holds;
    os << "result\t" << bool_str(result.holds) << '\n';
    if (!result.holds) append_witness(os, result, rep, table, 'y');
  } else if (kind == "poly") {
    NCPolynomial f = textio::parse_polynomial(body, rep.field());
    CheckResult result = check_polynomial_identity(rep, f, table);
    out.holds = result.holds;
    os << "result\t" << bool_str(result.holds) << '\n';
    if (!result.holds) append_witness(os, result, rep, table, 'x');
  } else {
    fail(Errc::parse, "unknown identity kind \"" + kind + "\" (expected action or poly)");
  }
  out.report = os.str();
  return out;
}

std::string verbal_report(const MatrixRepresentation& group, Coeff coeff, const std::string& generators_text) {
  if (!coeff.is_field()) fail(Errc::domain_mismatch, "verbal ideals are computed over fields, got " + coeff.str());
  std::vector<NCPolynomial> gens = textio::parse_polynomial_list(generators_text, coeff);
  FiniteGroupTable table = group_closure(group);
  FiniteGroupAlgebra alg(table, coeff);
  Subspace ideal = verbal_ideal(alg, gens);
  SubgroupSet d_sigma = dimension_subgroup_sigma(alg, gens);

  std::ostringstream os;
  os << "# verb\tverbal\n";
  os << "# coeff\t" << coeff.str() << '\n';
  os << "# order\t" << table.order() << '\n';
  os << "# gens\t";
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "; " : "") << gens[i].str();
  os << '\n';
  if (coeff.characteristic() != 0)
    os << "# note\tcharacteristic p: multilinear substitution gives a lower bound for the verbal ideal\n";
  os << "ideal_dim\t" << ideal.dim() << '\n';
  os << "D_sigma_order\t" << d_sigma.order() << '\n';
  os << "D_sigma";
  for (int g : d_sigma.elems) os << '\t' << g;
  os << '\n';
  os << "quotient_abelian\t" << bool_str(quotient_abelian(table, d_sigma)) << '\n';
  return os.str();
}

} // namespace varkit::reports
