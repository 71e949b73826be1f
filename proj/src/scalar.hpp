#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace varkit {

enum class Domain { integer, rational, modp };

/// Coefficient-domain descriptor: Z, Q or F_p with a fixed prime modulus.
struct Coeff {
  Domain dom = Domain::integer;
  std::int64_t p = 0; // modulus, meaningful only for modp

  static Coeff Z() { return {Domain::integer, 0}; }
  static Coeff Q() { return {Domain::rational, 0}; }
  static Coeff Fp(std::int64_t p); // validates primality

  bool is_field() const { return dom != Domain::integer; }
  int characteristic() const { return dom == Domain::modp ? static_cast<int>(p) : 0; }
  bool operator==(const Coeff& o) const { return dom == o.dom && p == o.p; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }
  std::string str() const;
};

/// Exact scalar over Z, Q or F_p. Rationals are normalized and residues
/// reduced at construction, so equality is representation equality.
class Scalar {
public:
  Scalar() : dom_(Coeff::Z()), z_(0) {}

  static Scalar integer(mpz_class v);
  static Scalar integer(long v) { return integer(mpz_class(v)); }
  static Scalar rational(mpq_class v);
  static Scalar rational(long num, long den);
  static Scalar modp(mpz_class v, std::int64_t p);
  static Scalar zero(Coeff c);
  static Scalar one(Coeff c);
  /// Canonical image of a small integer in the domain.
  static Scalar of_int(long v, Coeff c);

  Coeff coeff() const { return dom_; }
  bool is_zero() const;
  bool is_one() const;

  const mpz_class& int_value() const;  // Z
  const mpq_class& rat_value() const;  // Q
  const mpz_class& residue() const;    // F_p, in [0, p)

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Multiplicative inverse. Fields only; over Z only +-1 are invertible.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order within one domain (container keys, canonical sorting).
  bool operator<(const Scalar& o) const;

  /// Canonical coercion: identity, Z->Q, or Z->F_p. Anything else fails.
  Scalar to(Coeff target) const;

  std::string str() const;

private:
  Coeff dom_;
  mpz_class z_; // integer value or residue
  mpq_class q_; // rational value

  void check_same(const Scalar& o) const;
};

} // namespace varkit
