#include "qrep/ring.hpp"

namespace qrep {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 61)) throw ArithmeticError("modulus must be below 2^61");
  // Trial division is fine for the small primes used at desk scale.
  if (p < (std::uint64_t{1} << 40) && !is_prime(p))
    throw ArithmeticError("modulus " + std::to_string(p) + " is not prime");
  if (p < 2) throw ArithmeticError("modulus must be at least 2");
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  const auto p = static_cast<long long>(p_);
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_string(const std::string& s) const {
  mpz_class z(s);
  z %= mpz_class(std::to_string(p_));
  if (z < 0) z += mpz_class(std::to_string(p_));
  return std::stoull(z.get_str());
}

long long PrimeField::to_signed(const Elem& a) const {
  return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_)
                    : static_cast<long long>(a);
}

PrimeField::Elem PrimeField::inv(const Elem& a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in " + name());
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    const __int128 tt = t - q * new_t;
    t = new_t;
    new_t = tt;
    const __int128 rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

RationalField::Elem RationalField::from_string(const std::string& s) const {
  Elem q(s);
  q.canonicalize();
  return q;
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (is_zero(a)) throw ArithmeticError("inverse of zero in Q");
  return Elem(1) / a;
}

IntegerRing::Elem IntegerRing::gcd(const Elem& a, const Elem& b) const {
  Elem g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

IntegerRing::Elem IntegerRing::gcdext(const Elem& a, const Elem& b, Elem& s, Elem& t) const {
  Elem g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

IntegerRing::Elem IntegerRing::divexact(const Elem& a, const Elem& b) const {
  if (sgn(b) == 0) throw ArithmeticError("division by zero in Z");
  Elem q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool IntegerRing::divides(const Elem& a, const Elem& b) const {
  if (sgn(a) == 0) return sgn(b) == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

IntegerRing::Elem IntegerRing::fdiv(const Elem& a, const Elem& b) const {
  if (sgn(b) == 0) throw ArithmeticError("division by zero in Z");
  Elem q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntegerRing::Elem IntegerRing::reduce(const Elem& a, const Elem& d) const {
  if (sgn(d) == 0) return a;
  Elem r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace qrep
