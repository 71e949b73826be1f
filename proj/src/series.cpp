#include "series.hpp"

#include "config.hpp"
#include "error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace varkit {

TruncatedSeries::TruncatedSeries(int letters, int cutoff, Coeff c)
    : letters_(letters), cutoff_(cutoff), coeff_(c) {
  if (letters < 0) fail(Errc::invalid, "negative letter count");
  if (cutoff < 1) fail(Errc::invalid, "cutoff must be >= 1");
  if (cutoff > config().cutoff_cap(letters))
    fail(Errc::resource_cap, "cutoff " + std::to_string(cutoff) + " exceeds cap " +
                                 std::to_string(config().cutoff_cap(letters)) + " for " +
                                 std::to_string(letters) + " letters");
}

TruncatedSeries TruncatedSeries::one(int letters, int cutoff, Coeff c) {
  TruncatedSeries s(letters, cutoff, c);
  s.add_term({}, Scalar::one(c));
  return s;
}

TruncatedSeries TruncatedSeries::letter(int index, int letters, int cutoff, Coeff c) {
  if (index < 1 || index > letters)
    fail(Errc::invalid, "letter index " + std::to_string(index) + " out of range 1.." + std::to_string(letters));
  TruncatedSeries s(letters, cutoff, c);
  s.add_term({index}, Scalar::one(c));
  return s;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (letters_ != o.letters_ || cutoff_ != o.cutoff_ || coeff_ != o.coeff_)
    fail(Errc::domain_mismatch, "series parameters differ");
}

void TruncatedSeries::add_term(const Monomial& m, const Scalar& c) {
  if (static_cast<int>(m.size()) > cutoff_) return;
  if (c.is_zero()) return;
  for (int letter : m)
    if (letter < 1 || letter > letters_) fail(Errc::invalid, "letter index out of range");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r(letters_, cutoff_, coeff_);
  for (const auto& [ma, ca] : terms_) {
    int room = cutoff_ - static_cast<int>(ma.size());
    for (const auto& [mb, cb] : o.terms_) {
      if (static_cast<int>(mb.size()) > room) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& s) const {
  TruncatedSeries r(letters_, cutoff_, coeff_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return letters_ == o.letters_ && cutoff_ == o.cutoff_ && coeff_ == o.coeff_ && terms_ == o.terms_;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) mono << '*';
      mono << 'a' << m[i];
    }
    if (m.empty())
      os << c.str();
    else if (c.is_one())
      os << mono.str();
    else
      os << c.str() << '*' << mono.str();
  }
  return os.str();
}

namespace {

TruncatedSeries generator_series(int index, long exp, int letters, int cutoff) {
  TruncatedSeries base(letters, cutoff, Coeff::Z());
  if (exp > 0) {
    base.add_term({}, Scalar::integer(1));
    base.add_term({index}, Scalar::integer(1));
  } else {
    // Geometric inverse of 1 + a: alternate signs through the cutoff.
    Monomial m;
    for (int j = 0; j <= cutoff; ++j) {
      base.add_term(m, Scalar::integer(j % 2 == 0 ? 1 : -1));
      m.push_back(index);
    }
  }
  long n = std::labs(exp);
  TruncatedSeries acc = TruncatedSeries::one(letters, cutoff, Coeff::Z());
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

} // namespace

TruncatedSeries magnus_embed(const Word& w, int letters, int cutoff) {
  if (w.max_generator() > letters)
    fail(Errc::invalid, "word uses generator x" + std::to_string(w.max_generator()) + " beyond " +
                            std::to_string(letters) + " letters");
  TruncatedSeries acc = TruncatedSeries::one(letters, cutoff, Coeff::Z());
  for (const auto& s : w.syllables()) acc = acc * generator_series(s.gen, s.exp, letters, cutoff);
  return acc;
}

std::string DimensionDegree::str() const {
  return bounded ? std::to_string(value) : ">=" + std::to_string(value);
}

DimensionDegree dimension_degree(const Word& w, int letters, int cutoff) {
  TruncatedSeries s = magnus_embed(w, letters, cutoff);
  TruncatedSeries delta = s - TruncatedSeries::one(letters, cutoff, Coeff::Z());
  if (delta.is_zero()) return {cutoff + 1, false};
  // Terms are shortlex-ordered, so the first one has minimal degree.
  return {static_cast<int>(delta.terms().begin()->first.size()), true};
}

bool in_free_dimension_subgroup(const Word& w, int n, int letters) {
  if (n < 1) fail(Errc::invalid, "dimension subgroup index must be >= 1");
  return dimension_degree(w, letters, n).value >= n;
}

} // namespace varkit
