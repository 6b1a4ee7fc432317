#pragma once

#include <vector>

#include "iwasawa/cyclo.hpp"
#include "iwasawa/group.hpp"

namespace iwasawa {

/// Dirichlet character modulo f with values in mu_E, stored as a table of
/// exponents: chi(a) = exp(2 pi i k_a / E), k_a = -1 when gcd(a, f) > 1.
class DirichletChar {
 public:
  DirichletChar(i64 f, i64 E, std::vector<i64> exps);
  static DirichletChar trivial(i64 f);

  i64 modulus() const { return f_; }
  i64 value_order() const { return E_; }   // E
  i64 exponent(i64 a) const { return k_[mod(a, f_)]; }
  bool is_unit(i64 a) const { return exponent(a) >= 0; }
  i64 order() const;
  i64 conductor() const;
  bool is_trivial() const { return order() == 1; }
  bool is_odd() const;
  /// The primitive character inducing this one.
  DirichletChar primitive() const;
  /// chi viewed modulo a multiple F of its modulus.
  DirichletChar extend(i64 F) const;
  DirichletChar conj() const;
  DirichletChar operator*(const DirichletChar& o) const;
  bool operator==(const DirichletChar& o) const;

  Complex value(i64 a) const;  // 0 off the units
  /// chi(a) as an exact element of Q(mu_E).
  CycloElement exact(i64 a) const;
  /// chi(a) modulo p^M given an element of order E there (E | p - 1).
  i64 value_mod(i64 a, i64 root, i64 m) const;

  /// Trivial on the subgroup H of (Z/f)^x.
  bool kills(const std::vector<i64>& H) const;

 private:
  i64 f_, E_;
  std::vector<i64> k_;
};

/// All characters of (Z/f)^x (f >= 1), with the common value order lambda(f).
std::vector<DirichletChar> dirichlet_characters(i64 f);
/// Characters of (Z/f)^x / H.
std::vector<DirichletChar> characters_of_quotient(i64 f, const std::vector<i64>& H);

/// Carmichael's lambda(f).
i64 carmichael(i64 f);

/// B_{1,chi} = (1/f) sum_{a=1}^{f} a chi(a) for the primitive character
/// inducing chi, exactly in Q(mu_E). For trivial chi this is 1/2.
CycloElement bernoulli_b1(const DirichletChar& chi);

/// Discriminant of the fixed field of H in Q(mu_f) in absolute value, by the
/// conductor-discriminant formula.
Integer abs_discriminant(i64 f, const std::vector<i64>& H);

}  // namespace iwasawa
