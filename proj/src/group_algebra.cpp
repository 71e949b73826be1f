#include "group_algebra.hpp"

#include "error.hpp"

#include <algorithm>
#include <sstream>

namespace varkit {

GroupAlgebraElement GroupAlgebraElement::of_word(const Word& w, Scalar coefficient) {
  GroupAlgebraElement e(coefficient.coeff());
  e.add_term(w, coefficient);
  return e;
}

void GroupAlgebraElement::add_term(const Word& w, const Scalar& c) {
  if (c.coeff() != coeff_) fail(Errc::domain_mismatch, "term domain differs from element domain");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int GroupAlgebraElement::max_generator() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_generator());
  return m;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement r(coeff_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (coeff_ != o.coeff_)
    fail(Errc::domain_mismatch, "element domains differ: " + coeff_.str() + " vs " + o.coeff_.str());
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) { return *this += -o; }

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.coeff() != b.coeff())
    fail(Errc::domain_mismatch, "element domains differ: " + a.coeff().str() + " vs " + b.coeff().str());
  GroupAlgebraElement r(a.coeff());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add_term(wa * wb, ca * cb);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Scalar& s) const {
  GroupAlgebraElement r(coeff_);
  for (const auto& [w, c] : terms_) r.add_term(w, c * s);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::to(Coeff target) const {
  GroupAlgebraElement r(target);
  for (const auto& [w, c] : terms_) r.add_term(w, c.to(target));
  return r;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Scalar a = c;
    bool negative = false;
    if (a.coeff().dom == Domain::integer) negative = a.int_value() < 0;
    if (a.coeff().dom == Domain::rational) negative = a.rat_value() < 0;
    if (negative) a = -a;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (w.is_identity())
      os << a.str();
    else if (a.is_one())
      os << w.str();
    else
      os << a.str() << '*' << w.str();
  }
  return os.str();
}

Scalar augmentation(const GroupAlgebraElement& u) {
  Scalar s = Scalar::zero(u.coeff());
  for (const auto& [w, c] : u.terms()) s += c;
  return s;
}

GroupAlgebraElement augmentation_product(int n) {
  if (n < 1) fail(Errc::invalid, "augmentation_product requires n >= 1");
  GroupAlgebraElement acc = GroupAlgebraElement::one(Coeff::Z());
  for (int i = 1; i <= n; ++i) {
    GroupAlgebraElement factor = GroupAlgebraElement::of_word(Word::generator(i), Scalar::integer(1));
    factor -= GroupAlgebraElement::one(Coeff::Z());
    acc = acc * factor;
  }
  return acc;
}

GroupAlgebraElement fox_derivative(const Word& w, int gen) {
  GroupAlgebraElement d(Coeff::Z());
  Word prefix;
  for (const auto& s : w.syllables()) {
    long n = std::labs(s.exp);
    int step = s.exp > 0 ? 1 : -1;
    for (long i = 0; i < n; ++i) {
      if (s.gen == gen) {
        if (step > 0) {
          // d(prefix * x) = d(prefix) + prefix
          d.add_term(prefix, Scalar::integer(1));
        } else {
          // d(prefix * x^-1) = d(prefix) - prefix * x^-1
          d.add_term(prefix * Word::generator(s.gen, -1), Scalar::integer(-1));
        }
      }
      prefix = prefix * Word::generator(s.gen, step);
    }
  }
  return d;
}

} // namespace varkit
