#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "iwasawa/arith.hpp"

namespace iwasawa {

using Complex = std::complex<long double>;

/// Coefficients of the cyclotomic polynomial Phi_f, constant term first.
const std::vector<i64>& cyclotomic_polynomial(i64 f);

/// Exact element of Q(mu_f), stored on the power basis 1, xi, ..., xi^{phi(f)-1}
/// with a common positive denominator. The form is canonical, so equality is
/// coefficient equality (after lifting to a common conductor if needed).
class CycloElement {
 public:
  explicit CycloElement(i64 f = 1);

  static CycloElement zero(i64 f) { return CycloElement(f); }
  static CycloElement one(i64 f) { return from_rational(f, 1); }
  static CycloElement from_rational(i64 f, const Rational& q);
  /// xi_f^k for any integer k.
  static CycloElement root_power(i64 f, i64 k);
  /// sum_i c[i] xi_f^i, any length; reduced on construction.
  static CycloElement from_coeffs(i64 f, const std::vector<Rational>& c);

  i64 conductor() const { return f_; }
  int degree() const { return static_cast<int>(num_.size()); }
  Rational coeff(int i) const;
  std::vector<Rational> coefficients() const;

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws if not rational

  /// sigma_b : xi -> xi^b, gcd(b, f) = 1.
  CycloElement galois(i64 b) const;
  /// Same number written in Q(mu_F), f | F.
  CycloElement lift(i64 F) const;
  /// Same number written in Q(mu_g) for g | f; throws std::domain_error if it
  /// does not lie there.
  CycloElement descend(i64 g) const;
  /// Multiply by xi^k.
  CycloElement mul_root(i64 k) const;

  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator-(const CycloElement& o) const;
  CycloElement operator-() const;
  CycloElement operator*(const CycloElement& o) const;
  CycloElement operator*(const Rational& q) const;
  CycloElement& operator+=(const CycloElement& o) { return *this = *this + o; }
  CycloElement& operator-=(const CycloElement& o) { return *this = *this - o; }
  CycloElement& operator*=(const CycloElement& o) { return *this = *this * o; }
  bool operator==(const CycloElement& o) const;
  bool operator!=(const CycloElement& o) const { return !(*this == o); }

  /// Complex embedding xi_f -> exp(2 pi i / f).
  Complex embed() const;
  /// Reduction modulo a prime q with xi_f -> xi_image (an element of order
  /// dividing f in F_q). Throws if the denominator is divisible by q.
  i64 reduce_mod(i64 q, i64 xi_image) const;

 private:
  void normalize();
  static CycloElement from_dense(i64 f, const std::vector<Integer>& acc, const Integer& den);

  i64 f_;
  std::vector<Integer> num_;
  Integer den_;
};

/// Formal product prod (1 - xi_f^a)^e, kept unexpanded so that reductions
/// modulo large split primes stay cheap.
class CycloProduct {
 public:
  explicit CycloProduct(i64 f = 1) : f_(f) {}
  void add_factor(i64 a, int e = 1) { factors_.emplace_back(mod(a, f_), e); }

  i64 conductor() const { return f_; }
  const std::vector<std::pair<i64, int>>& factors() const { return factors_; }
  CycloProduct galois(i64 b) const;
  CycloElement expand() const;
  /// Reduction modulo q with xi_f -> xi_image; throws std::domain_error if
  /// some factor vanishes.
  i64 reduce_mod(i64 q, i64 xi_image) const;

 private:
  i64 f_;
  std::vector<std::pair<i64, int>> factors_;
};

}  // namespace iwasawa
