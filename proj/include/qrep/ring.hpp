#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qrep {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Scalar rings share one interface. PID helpers (gcd, divexact, reduce) are
// also present on the fields so generic code compiles; over a field every
// module is free and those paths only ever see units.

class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem from_string(const std::string& s) const;
  std::string to_string(const Elem& a) const { return std::to_string(a); }
  long long to_signed(const Elem& a) const;

  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(const Elem& a, const Elem& b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_unit(const Elem& a) const { return a != 0; }
  Elem normalize(const Elem& a) const { return a == 0 ? 0 : 1; }
  Elem gcd(const Elem& a, const Elem& b) const { return (a == 0 && b == 0) ? 0 : 1; }
  Elem divexact(const Elem& a, const Elem& b) const { return div(a, b); }
  bool divides(const Elem& a, const Elem& b) const { return a != 0 || b == 0; }
  // Over a field the only orders are 0 (free) and units, so reduction is identity.
  Elem reduce(const Elem& a, const Elem&) const { return a; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using Elem = mpq_class;
  static constexpr bool is_field = true;

  std::string name() const { return "Q"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_string(const std::string& s) const;
  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_unit(const Elem& a) const { return !is_zero(a); }
  Elem normalize(const Elem& a) const { return is_zero(a) ? zero() : one(); }
  Elem gcd(const Elem& a, const Elem& b) const { return (is_zero(a) && is_zero(b)) ? zero() : one(); }
  Elem divexact(const Elem& a, const Elem& b) const { return div(a, b); }
  bool divides(const Elem& a, const Elem& b) const { return !is_zero(a) || is_zero(b); }
  Elem reduce(const Elem& a, const Elem&) const { return a; }

  bool operator==(const RationalField&) const { return true; }
};

class IntegerRing {
 public:
  using Elem = mpz_class;
  static constexpr bool is_field = false;

  std::string name() const { return "Z"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_string(const std::string& s) const { return Elem(s); }
  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }

  bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
  Elem normalize(const Elem& a) const { return abs(a); }
  Elem gcd(const Elem& a, const Elem& b) const;
  // Extended gcd: g = s*a + t*b with g >= 0.
  Elem gcdext(const Elem& a, const Elem& b, Elem& s, Elem& t) const;
  Elem divexact(const Elem& a, const Elem& b) const;
  bool divides(const Elem& a, const Elem& b) const;
  // Floor quotient, used by the Euclidean steps of Smith reduction.
  Elem fdiv(const Elem& a, const Elem& b) const;
  // Representative of a modulo d in [0, |d|); identity when d = 0.
  Elem reduce(const Elem& a, const Elem& d) const;

  bool operator==(const IntegerRing&) const { return true; }
};

}  // namespace qrep
