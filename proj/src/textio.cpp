#include "textio.hpp"

#include "error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace varkit::textio {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool consume_word(const char* kw) {
    skip_ws();
    std::size_t n = std::string(kw).size();
    if (s.compare(pos, n, kw) != 0) return false;
    pos += n;
    return true;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(Errc::parse, what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }
  long read_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) error("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }
  mpz_class read_mpz() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) error("expected an integer");
    return mpz_class(s.substr(start, pos - start));
  }
};

Scalar read_scalar(Cursor& cur, Coeff target) {
  mpz_class num = cur.read_mpz();
  if (cur.consume('/')) {
    mpz_class den = cur.read_mpz();
    if (den == 0) cur.error("zero denominator");
    switch (target.dom) {
      case Domain::rational: return Scalar::rational(mpq_class(num, den));
      case Domain::modp: return Scalar::modp(num, target.p) * Scalar::modp(den, target.p).inverse();
      case Domain::integer: cur.error("rational value in an integer context");
    }
  }
  if (cur.consume_word("mod")) {
    mpz_class mod = cur.read_mpz();
    if (target.dom != Domain::modp || mod != target.p)
      cur.error("residue modulus " + mod.get_str() + " does not match domain " + target.str());
    return Scalar::modp(num, target.p);
  }
  switch (target.dom) {
    case Domain::integer: return Scalar::integer(num);
    case Domain::rational: return Scalar::rational(mpq_class(num));
    case Domain::modp: return Scalar::modp(num, target.p);
  }
  cur.error("bad scalar domain");
}

bool at_word_atom(Cursor& cur) {
  char c = cur.peek();
  if (c == 'x' || c == 'y') return true;
  return cur.s.compare(cur.pos, 5, "comm(") == 0;
}

Word read_word_atom(Cursor& cur);

Word read_word_sequence(Cursor& cur, const std::string& stops) {
  Word w;
  while (!cur.eof() && stops.find(cur.peek()) == std::string::npos) {
    if (!at_word_atom(cur)) {
      if (cur.consume('1')) continue; // explicit identity
      cur.error("expected a word atom");
    }
    w = w * read_word_atom(cur);
  }
  return w;
}

Word read_word_atom(Cursor& cur) {
  if (cur.consume_word("comm(")) {
    Word a = read_word_sequence(cur, ",");
    if (!cur.consume(',')) cur.error("expected ',' in comm(,)");
    Word b = read_word_sequence(cur, ")");
    if (!cur.consume(')')) cur.error("expected ')' closing comm(");
    Word base = commutator(a, b);
    if (cur.peek() == '^') {
      cur.consume('^');
      return base.pow(cur.read_int());
    }
    return base;
  }
  char c = cur.peek();
  if (c != 'x' && c != 'y') cur.error("expected generator atom");
  ++cur.pos;
  if (!std::isdigit(static_cast<unsigned char>(cur.pos < cur.s.size() ? cur.s[cur.pos] : '\0')))
    cur.error("expected generator index");
  long index = cur.read_int();
  long exp = 1;
  if (cur.pos < cur.s.size() && cur.s[cur.pos] == '^') {
    ++cur.pos;
    exp = cur.read_int();
  }
  return Word::generator(static_cast<int>(index), exp);
}

GroupAlgebraElement read_element(Cursor& cur, Coeff target, const std::string& stops);

GroupAlgebraElement read_element_factor(Cursor& cur, Coeff target) {
  if (cur.consume('(')) {
    GroupAlgebraElement inner = read_element(cur, target, ")");
    if (!cur.consume(')')) cur.error("expected ')'");
    return inner;
  }
  if (at_word_atom(cur)) return GroupAlgebraElement::of_word(read_word_atom(cur), Scalar::one(target));
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c)))
    return GroupAlgebraElement::of_word(Word(), read_scalar(cur, target));
  cur.error("expected scalar, word atom or '('");
}

GroupAlgebraElement read_element_product(Cursor& cur, Coeff target, const std::string& stops) {
  GroupAlgebraElement acc = read_element_factor(cur, target);
  for (;;) {
    if (cur.eof()) break;
    char c = cur.peek();
    if (stops.find(c) != std::string::npos || c == '+' || c == '-') break;
    if (c == '*') cur.consume('*');
    acc = acc * read_element_factor(cur, target);
  }
  return acc;
}

GroupAlgebraElement read_element(Cursor& cur, Coeff target, const std::string& stops) {
  GroupAlgebraElement acc = GroupAlgebraElement::zero(target);
  bool negative = cur.consume('-');
  for (;;) {
    GroupAlgebraElement term = read_element_product(cur, target, stops);
    acc += negative ? -term : term;
    if (cur.eof() || stops.find(cur.peek()) != std::string::npos) break;
    if (cur.consume('+'))
      negative = false;
    else if (cur.consume('-'))
      negative = true;
    else
      cur.error("expected '+', '-' or end of element");
  }
  return acc;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<Scalar> parse_row(const std::string& text, Coeff field, int expect) {
  Cursor cur{text};
  std::vector<Scalar> row;
  while (!cur.eof()) row.push_back(read_scalar(cur, field));
  if (expect >= 0 && static_cast<int>(row.size()) != expect)
    fail(Errc::parse, "row \"" + trimmed(text) + "\" has " + std::to_string(row.size()) + " entries, expected " +
                          std::to_string(expect));
  return row;
}

DenseMatrix parse_matrix_rows(const std::string& text, Coeff field, int dim_rows, int dim_cols) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& part : split(text, ';')) rows.push_back(parse_row(part, field, dim_cols));
  if (static_cast<int>(rows.size()) != dim_rows)
    fail(Errc::parse, "matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim_rows));
  return DenseMatrix::from_rows(field, rows);
}

DenseMatrix permutation_matrix(const std::string& cycles, int degree) {
  std::vector<int> image(degree);
  for (int i = 0; i < degree; ++i) image[i] = i;
  Cursor cur{cycles};
  while (!cur.eof()) {
    if (!cur.consume('(')) cur.error("expected '(' starting a cycle");
    std::vector<int> cycle;
    while (!cur.consume(')')) {
      cur.consume(',');
      if (cur.eof()) cur.error("unterminated cycle");
      long p = cur.read_int();
      if (p < 1 || p > degree) cur.error("cycle point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<int>(p) - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      for (std::size_t j = i + 1; j < cycle.size(); ++j)
        if (cycle[i] == cycle[j]) cur.error("repeated point in cycle");
    }
    if (cycle.size() < 2) continue;
    // Compose on the right: existing image followed by this cycle.
    std::vector<int> step(degree);
    for (int i = 0; i < degree; ++i) step[i] = i;
    for (std::size_t i = 0; i < cycle.size(); ++i) step[cycle[i]] = cycle[(i + 1) % cycle.size()];
    for (int i = 0; i < degree; ++i) image[i] = step[image[i]];
  }
  DenseMatrix m(degree, degree, Coeff::Q());
  for (int i = 0; i < degree; ++i) m.at(i, image[i]) = Scalar::one(Coeff::Q());
  return m;
}

struct StructuredFile {
  std::map<std::string, std::string> fields;
  std::vector<std::pair<std::string, std::string>> entries; // keyword lines: gen/basis
};

StructuredFile parse_structured(const std::string& text) {
  StructuredFile f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    std::size_t sp = t.find_first_of(" \t");
    if (eq != std::string::npos && (sp == std::string::npos || eq < sp)) {
      f.fields[trimmed(t.substr(0, eq))] = trimmed(t.substr(eq + 1));
    } else if (sp != std::string::npos) {
      f.entries.emplace_back(trimmed(t.substr(0, sp)), trimmed(t.substr(sp + 1)));
    } else {
      fail(Errc::parse, "line " + std::to_string(lineno) + ": cannot parse \"" + t + "\"");
    }
  }
  return f;
}

std::string required(const StructuredFile& f, const std::string& key) {
  auto it = f.fields.find(key);
  if (it == f.fields.end()) fail(Errc::parse, "missing field " + key + "=");
  return it->second;
}

int required_int(const StructuredFile& f, const std::string& key) {
  try {
    return std::stoi(required(f, key));
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::parse, "field " + key + "= is not an integer");
  }
}

} // namespace

Coeff parse_coeff(const std::string& text) {
  std::string t = trimmed(text);
  if (t == "Z") return Coeff::Z();
  if (t == "Q") return Coeff::Q();
  if (t.size() > 1 && t[0] == 'F') {
    try {
      return Coeff::Fp(std::stoll(t.substr(1)));
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::parse, "bad field spec \"" + t + "\"");
    }
  }
  fail(Errc::parse, "bad coefficient domain \"" + t + "\" (expected Z, Q or F<p>)");
}

Scalar parse_scalar(const std::string& text, Coeff target) {
  Cursor cur{text};
  Scalar s = read_scalar(cur, target);
  if (!cur.eof()) cur.error("trailing input after scalar");
  return s;
}

Word parse_word(const std::string& text) {
  Cursor cur{text};
  Word w = read_word_sequence(cur, "");
  if (!cur.eof()) cur.error("trailing input after word");
  return w;
}

GroupAlgebraElement parse_element(const std::string& text, Coeff target) {
  Cursor cur{text};
  if (cur.eof()) fail(Errc::parse, "empty element");
  GroupAlgebraElement e = read_element(cur, target, "");
  if (!cur.eof()) cur.error("trailing input after element");
  return e;
}

NCPolynomial parse_polynomial(const std::string& text, Coeff field) {
  Cursor cur{text};
  NCPolynomial f(field);
  if (cur.eof()) fail(Errc::parse, "empty polynomial");
  bool negative = cur.consume('-');
  for (;;) {
    Scalar coefficient = Scalar::one(field);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coefficient = read_scalar(cur, field);
      have_coef = true;
    }
    PolyMonomial mono;
    if (!have_coef || cur.peek() == '*') {
      if (have_coef && !cur.consume('*')) cur.error("expected '*'");
      for (;;) {
        if (cur.peek() != 'x') cur.error("expected variable");
        ++cur.pos;
        mono.push_back(static_cast<int>(cur.read_int()));
        if (cur.peek() == '*')
          cur.consume('*');
        else
          break;
      }
    }
    f.add_term(mono, negative ? -coefficient : coefficient);
    if (cur.eof()) break;
    if (cur.consume('+'))
      negative = false;
    else if (cur.consume('-'))
      negative = true;
    else
      cur.error("expected '+', '-' or end of polynomial");
  }
  return f;
}

std::vector<NCPolynomial> parse_polynomial_list(const std::string& text, Coeff field) {
  std::vector<NCPolynomial> out;
  for (const auto& part : split(text, ';')) {
    std::string t = trimmed(part);
    if (t.empty()) continue;
    out.push_back(parse_polynomial(t, field));
  }
  if (out.empty()) fail(Errc::parse, "empty polynomial list");
  return out;
}

MatrixRepresentation parse_representation(const std::string& text) {
  StructuredFile f = parse_structured(text);
  std::string kind = required(f, "kind");
  if (kind == "matrix") {
    Coeff field = parse_coeff(required(f, "field"));
    if (!field.is_field()) fail(Errc::parse, "representation field must be Q or F<p>");
    int dim = required_int(f, "dim");
    MatrixRepresentation rep(dim, field);
    for (const auto& [key, value] : f.entries) {
      if (key != "gen") fail(Errc::parse, "unexpected entry \"" + key + "\" in matrix representation");
      rep.add_generator(parse_matrix_rows(value, field, dim, dim));
    }
    return rep;
  }
  if (kind == "perm") {
    int degree = required_int(f, "degree");
    MatrixRepresentation rep(degree, Coeff::Q());
    for (const auto& [key, value] : f.entries) {
      if (key != "gen") fail(Errc::parse, "unexpected entry \"" + key + "\" in permutation group");
      rep.add_generator(permutation_matrix(value, degree));
    }
    return rep;
  }
  fail(Errc::parse, "unknown kind \"" + kind + "\" (expected matrix or perm)");
}

std::string format_representation(const MatrixRepresentation& rep) {
  std::ostringstream os;
  os << "kind=matrix\n";
  os << "field=" << rep.field().str() << "\n";
  os << "dim=" << rep.dim() << "\n";
  for (const auto& g : rep.generators()) os << "gen " << g.str() << "\n";
  return os.str();
}

std::vector<DenseMatrix> parse_algebra(const std::string& text) {
  StructuredFile f = parse_structured(text);
  if (required(f, "kind") != "algebra") fail(Errc::parse, "expected kind=algebra");
  Coeff field = parse_coeff(required(f, "field"));
  if (!field.is_field()) fail(Errc::parse, "algebra field must be Q or F<p>");
  int dim = required_int(f, "dim");
  std::vector<DenseMatrix> basis;
  for (const auto& [key, value] : f.entries) {
    if (key != "basis") fail(Errc::parse, "unexpected entry \"" + key + "\" in algebra file");
    basis.push_back(parse_matrix_rows(value, field, dim, dim));
  }
  if (basis.empty()) fail(Errc::parse, "algebra file has no basis lines");
  return basis;
}

} // namespace varkit::textio
