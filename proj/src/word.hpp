#pragma once

#include <map>
#include <string>
#include <vector>

namespace varkit {

struct Syllable {
  int gen;  // generator index, 1-based
  long exp; // nonzero
  bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
};

/// Freely reduced word of the free group F(x1, x2, ...): adjacent syllables
/// have distinct generators, exponents are nonzero, the empty word is the
/// identity.
class Word {
public:
  Word() = default;
  static Word generator(int index, long exp = 1);
  static Word from_syllables(const std::vector<Syllable>& syllables); // reduces

  bool is_identity() const { return syl_.empty(); }
  long length() const; // sum of |exponents|
  int max_generator() const;
  const std::vector<Syllable>& syllables() const { return syl_; }

  friend Word operator*(const Word& a, const Word& b);
  Word inverse() const;
  Word pow(long e) const;

  bool operator==(const Word& o) const { return syl_ == o.syl_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const; // shortlex on expanded letters

  std::string str() const; // "x1 x2^-1"; identity prints as "1"

private:
  std::vector<Syllable> syl_;
  void push_reduced(int gen, long exp);
  friend Word substitute(const Word&, const std::map<int, Word>&);
};

/// [a,b] = a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);

/// [[..[w1,w2],w3]..,wk]; a single word is returned unchanged.
Word left_normed_commutator(const std::vector<Word>& ws);

/// Homomorphic image; every generator occurring in w must have an image.
Word substitute(const Word& w, const std::map<int, Word>& images);

} // namespace varkit
