#pragma once

#include "matrep.hpp"
#include "scalar.hpp"
#include "series.hpp"

#include <string>
#include <vector>

namespace varkit::reports {

// All reports are TSV with '#'-prefixed header lines; identical inputs
// produce byte-identical output.

std::string magnus_expand(const std::string& word_text, int letters, int cutoff);

struct MagnusTest {
  bool in_dn = false;
  DimensionDegree degree{0, true};
  std::string report;
};
MagnusTest magnus_test(const std::string& word_text, int letters, int cutoff, int test_n);

std::string dimsub_report(const MatrixRepresentation& group, Coeff coeff, int nmax, bool with_gamma);

std::string identities_of_algebra(const std::vector<DenseMatrix>& basis, int degree);
std::string identities_of_rep(const MatrixRepresentation& rep, int degree);

struct CheckOutcome {
  bool holds = false;
  std::string report;
};
/// spec is "action:<element>" or "poly:<polynomial>".
CheckOutcome check_identity(const MatrixRepresentation& rep, const std::string& spec);

std::string verbal_report(const MatrixRepresentation& group, Coeff coeff, const std::string& generators_text);

} // namespace varkit::reports
