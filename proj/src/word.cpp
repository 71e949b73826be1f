#include "word.hpp"

#include "error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace varkit {

void Word::push_reduced(int gen, long exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == gen) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({gen, exp});
}

Word Word::generator(int index, long exp) {
  if (index < 1) fail(Errc::invalid, "generator index must be >= 1");
  Word w;
  w.push_reduced(index, exp);
  return w;
}

Word Word::from_syllables(const std::vector<Syllable>& syllables) {
  Word w;
  for (const auto& s : syllables) {
    if (s.gen < 1) fail(Errc::invalid, "generator index must be >= 1");
    w.push_reduced(s.gen, s.exp);
  }
  return w;
}

long Word::length() const {
  long n = 0;
  for (const auto& s : syl_) n += std::labs(s.exp);
  return n;
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& s : syl_) m = std::max(m, s.gen);
  return m;
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  for (const auto& s : b.syl_) r.push_reduced(s.gen, s.exp);
  return r;
}

Word Word::inverse() const {
  Word r;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.push_back({it->gen, -it->exp});
  return r;
}

Word Word::pow(long e) const {
  if (e == 0) return Word();
  Word base = e > 0 ? *this : inverse();
  long n = std::labs(e);
  Word acc;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Word::operator<(const Word& o) const {
  long la = length(), lb = o.length();
  if (la != lb) return la < lb;
  // Equal length: compare letter by letter; for one letter, generator index
  // first, then positive before negative exponent.
  std::size_t ia = 0, ib = 0;
  long ra = 0, rb = 0; // letters consumed inside the current syllable
  while (ia < syl_.size() && ib < o.syl_.size()) {
    const Syllable& a = syl_[ia];
    const Syllable& b = o.syl_[ib];
    if (a.gen != b.gen) return a.gen < b.gen;
    bool apos = a.exp > 0, bpos = b.exp > 0;
    if (apos != bpos) return apos;
    long na = std::labs(a.exp) - ra, nb = std::labs(b.exp) - rb;
    long step = std::min(na, nb);
    ra += step;
    rb += step;
    if (ra == std::labs(a.exp)) { ++ia; ra = 0; }
    if (rb == std::labs(b.exp)) { ++ib; rb = 0; }
  }
  return false; // equal length and all letters matched: words are equal
}

std::string Word::str() const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << syl_[i].gen;
    if (syl_[i].exp != 1) os << '^' << syl_[i].exp;
  }
  return os.str();
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word left_normed_commutator(const std::vector<Word>& ws) {
  if (ws.empty()) fail(Errc::invalid, "left-normed commutator of an empty list");
  Word acc = ws[0];
  for (std::size_t i = 1; i < ws.size(); ++i) acc = commutator(acc, ws[i]);
  return acc;
}

Word substitute(const Word& w, const std::map<int, Word>& images) {
  Word r;
  for (const auto& s : w.syl_) {
    auto it = images.find(s.gen);
    if (it == images.end()) fail(Errc::invalid, "no image for generator x" + std::to_string(s.gen));
    r = r * it->second.pow(s.exp);
  }
  return r;
}

} // namespace varkit
