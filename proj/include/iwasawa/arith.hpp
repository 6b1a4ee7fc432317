#pragma once

// Integer and p-adic helpers shared by every module: modular arithmetic on
// 64-bit residues, p-adic valuations, primality, primitive roots and
// Teichmuller lifts. Exact rationals are GMP's mpq_class.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace iwasawa {

using i64 = std::int64_t;
using i128 = __int128;
using Integer = mpz_class;
using Rational = mpq_class;

/// Non-negative residue of a modulo m (m > 0).
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(mod(static_cast<i64>((static_cast<i128>(a) * b) % m), m));
}

i64 powmod(i64 base, i64 exp, i64 m);
i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
i64 invmod(i64 a, i64 m);

/// b^e with an overflow check (throws std::overflow_error).
i64 ipow(i64 b, int e);

/// v_p(x) for x != 0.
int valuation(i64 x, i64 p);
int valuation(const Integer& x, i64 p);
/// v_p(q) for q != 0 (may be negative).
int valuation(const Rational& q, i64 p);

bool is_prime(i64 n);
std::vector<i64> prime_factors(i64 n);  // distinct, ascending
i64 euler_phi(i64 n);
std::vector<i64> divisors(i64 n);       // ascending

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
i64 multiplicative_order(i64 a, i64 m);

/// Smallest primitive root modulo an odd prime p.
i64 primitive_root(i64 p);

/// Teichmuller lift of a (p does not divide a) modulo p^M.
i64 teichmuller(i64 a, i64 p, int M);

/// Image of a p-integral rational in Z/p^M; throws std::domain_error if q has
/// a p in its denominator.
i64 rational_mod(const Rational& q, i64 p, int M);
i64 integer_mod(const Integer& z, i64 m);

/// Kronecker symbol (d / n) for n > 0.
int kronecker(i64 d, i64 n);

/// Element of Z/p^k. The modulus travels with the value so that group-ring
/// code can be written once for every coefficient ring.
class Zmod {
 public:
  Zmod() = default;
  Zmod(i64 value, i64 modulus) : m_(modulus), v_(mod(value, modulus)) {}

  i64 value() const { return v_; }
  i64 modulus() const { return m_; }

  Zmod operator+(const Zmod& o) const { return {v_ + check(o).v_, m_}; }
  Zmod operator-(const Zmod& o) const { return {v_ - check(o).v_, m_}; }
  Zmod operator-() const { return {-v_, m_}; }
  Zmod operator*(const Zmod& o) const { return {mulmod(v_, check(o).v_, m_), m_}; }
  Zmod& operator+=(const Zmod& o) { return *this = *this + o; }
  Zmod& operator-=(const Zmod& o) { return *this = *this - o; }
  Zmod& operator*=(const Zmod& o) { return *this = *this * o; }
  bool operator==(const Zmod& o) const { return m_ == o.m_ && v_ == o.v_; }
  bool is_zero() const { return v_ == 0; }

  friend std::ostream& operator<<(std::ostream& os, const Zmod& z) { return os << z.v_; }

 private:
  const Zmod& check(const Zmod& o) const {
    if (o.m_ != m_) throw std::invalid_argument("Zmod: mixed moduli");
    return o;
  }
  i64 m_ = 1;
  i64 v_ = 0;
};

}  // namespace iwasawa
