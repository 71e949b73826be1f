#include "scalar.hpp"

#include "error.hpp"

namespace varkit {

Coeff Coeff::Fp(std::int64_t p) {
  if (p < 2) fail(Errc::invalid, "modulus must be a prime >= 2, got " + std::to_string(p));
  mpz_class pz(static_cast<long>(p));
  if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
    fail(Errc::invalid, "modulus " + std::to_string(p) + " is not prime");
  return {Domain::modp, p};
}

std::string Coeff::str() const {
  switch (dom) {
    case Domain::integer: return "Z";
    case Domain::rational: return "Q";
    case Domain::modp: return "F" + std::to_string(p);
  }
  return "?";
}

Scalar Scalar::integer(mpz_class v) {
  Scalar s;
  s.dom_ = Coeff::Z();
  s.z_ = std::move(v);
  return s;
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  s.dom_ = Coeff::Q();
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(Errc::invalid, "zero denominator");
  return rational(mpq_class(num, den));
}

Scalar Scalar::modp(mpz_class v, std::int64_t p) {
  Scalar s;
  s.dom_ = Coeff::Fp(p);
  mpz_class pz(static_cast<long>(p));
  mpz_fdiv_r(s.z_.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
  return s;
}

Scalar Scalar::zero(Coeff c) { return of_int(0, c); }
Scalar Scalar::one(Coeff c) { return of_int(1, c); }

Scalar Scalar::of_int(long v, Coeff c) {
  switch (c.dom) {
    case Domain::integer: return integer(v);
    case Domain::rational: return rational(mpq_class(v));
    case Domain::modp: return modp(mpz_class(v), c.p);
  }
  fail(Errc::invalid, "bad domain");
}

bool Scalar::is_zero() const {
  return dom_.dom == Domain::rational ? q_ == 0 : z_ == 0;
}

bool Scalar::is_one() const {
  return dom_.dom == Domain::rational ? q_ == 1 : z_ == 1;
}

const mpz_class& Scalar::int_value() const {
  if (dom_.dom != Domain::integer) fail(Errc::domain_mismatch, "not an integer scalar");
  return z_;
}

const mpq_class& Scalar::rat_value() const {
  if (dom_.dom != Domain::rational) fail(Errc::domain_mismatch, "not a rational scalar");
  return q_;
}

const mpz_class& Scalar::residue() const {
  if (dom_.dom != Domain::modp) fail(Errc::domain_mismatch, "not a prime-field scalar");
  return z_;
}

void Scalar::check_same(const Scalar& o) const {
  if (dom_ != o.dom_)
    fail(Errc::domain_mismatch, "scalar domains differ: " + dom_.str() + " vs " + o.dom_.str());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (dom_.dom) {
    case Domain::integer: r.z_ = -z_; break;
    case Domain::rational: r.q_ = -q_; break;
    case Domain::modp: r.z_ = z_ == 0 ? mpz_class(0) : mpz_class(dom_.p - z_); break;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  switch (dom_.dom) {
    case Domain::integer: z_ += o.z_; break;
    case Domain::rational: q_ += o.q_; break;
    case Domain::modp:
      z_ += o.z_;
      if (z_ >= dom_.p) z_ -= dom_.p;
      break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  switch (dom_.dom) {
    case Domain::integer: z_ *= o.z_; break;
    case Domain::rational: q_ *= o.q_; break;
    case Domain::modp: {
      z_ *= o.z_;
      mpz_class pz(static_cast<long>(dom_.p));
      mpz_fdiv_r(z_.get_mpz_t(), z_.get_mpz_t(), pz.get_mpz_t());
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::invalid, "division by zero");
  Scalar r = *this;
  switch (dom_.dom) {
    case Domain::integer:
      if (z_ != 1 && z_ != -1) fail(Errc::domain_mismatch, "integer " + str() + " is not invertible");
      return r;
    case Domain::rational:
      r.q_ = 1 / q_;
      return r;
    case Domain::modp: {
      mpz_class pz(static_cast<long>(dom_.p));
      if (mpz_invert(r.z_.get_mpz_t(), z_.get_mpz_t(), pz.get_mpz_t()) == 0)
        fail(Errc::invalid, "no inverse mod " + std::to_string(dom_.p));
      return r;
    }
  }
  fail(Errc::invalid, "bad domain");
}

bool Scalar::operator==(const Scalar& o) const {
  if (dom_ != o.dom_) return false;
  return dom_.dom == Domain::rational ? q_ == o.q_ : z_ == o.z_;
}

bool Scalar::operator<(const Scalar& o) const {
  check_same(o);
  return dom_.dom == Domain::rational ? q_ < o.q_ : z_ < o.z_;
}

Scalar Scalar::to(Coeff target) const {
  if (dom_ == target) return *this;
  if (dom_.dom != Domain::integer)
    fail(Errc::domain_mismatch, "no canonical map " + dom_.str() + " -> " + target.str());
  switch (target.dom) {
    case Domain::rational: return rational(mpq_class(z_));
    case Domain::modp: return modp(z_, target.p);
    default: fail(Errc::domain_mismatch, "no canonical map Z -> " + target.str());
  }
}

std::string Scalar::str() const {
  switch (dom_.dom) {
    case Domain::integer: return z_.get_str();
    case Domain::rational: return q_.get_str();
    case Domain::modp: return z_.get_str();
  }
  return "?";
}

} // namespace varkit
