#pragma once

#include <string>
#include <vector>

#include "iwasawa/cyclo.hpp"
#include "iwasawa/group.hpp"

namespace iwasawa {

/// Fixed field of H inside Q(mu_f), with f the true conductor.
class AbelianField {
 public:
  /// Validates that H is a subgroup and f is the conductor of the fixed field.
  AbelianField(i64 f, const std::vector<i64>& H);

  static AbelianField rationals() { return AbelianField(1, {0}); }
  /// Q(mu_m); m = 2 mod 4 is replaced by m/2.
  static AbelianField cyclotomic(i64 m);
  /// Q(sqrt(D)) for a fundamental discriminant D.
  static AbelianField quadratic(i64 D);
  /// Fixed field of H in Q(mu_f) for arbitrary f, with the conductor reduced.
  static AbelianField normalized(i64 f, const std::vector<i64>& H);

  i64 conductor() const { return f_; }
  const std::vector<i64>& subgroup() const { return H_; }
  int degree() const;
  bool is_real() const;
  bool is_rational() const { return f_ == 1; }
  bool contains(const AbelianField& sub) const;
  /// Gal(F/Q) as (Z/f)^x/H.
  GroupPtr galois_group() const { return FiniteAbelianGroup::quotient(f_, H_); }
  /// Preimage of H in (Z/F)^x for a multiple F of f.
  std::vector<i64> subgroup_at(i64 F) const;
  std::string describe() const;

  bool operator==(const AbelianField& o) const { return f_ == o.f_ && H_ == o.H_; }
  bool operator<(const AbelianField& o) const { return f_ != o.f_ ? f_ < o.f_ : H_ < o.H_; }

 private:
  i64 f_;
  std::vector<i64> H_;
};

/// True when no proper divisor of f gives the same fixed field.
bool is_true_conductor(i64 f, const std::vector<i64>& H);

/// All subfields of F (including Q and F), sorted.
std::vector<AbelianField> subfields(const AbelianField& F);

/// All abelian fields of conductor at most f_max (Q included), sorted.
std::vector<AbelianField> fields_up_to(i64 f_max);

/// K_n = K(mu_{p^{n+1}}) together with G_n = Gal(K_n/Q) and the integers
/// i0, m0, n0 controlling ramification of p in K_infinity / K_0.
struct TowerLevel {
  AbelianField base;
  i64 p;
  int n;
  i64 f_n;
  std::vector<i64> H_n;   // subgroup of (Z/f_n)^x fixing K_n
  GroupPtr G;             // G_n
  GroupPtr G_plus;        // G_n / <c>
  int conj;               // index of c in G
  int i0, m0, n0;
  i64 pn1() const;        // p^{n+1}
  AbelianField field() const { return AbelianField(f_n, H_n); }
};

TowerLevel make_tower(const AbelianField& K, i64 p, int n);

/// N_{Q(mu_f)/F}(1 - xi_f) as an exact element; F != Q.
CycloElement cyclotomic_unit(const AbelianField& F);
/// The same unit as an unexpanded product.
CycloProduct cyclotomic_unit_product(const AbelianField& F);
/// epsilon_n = eps_{K_n}^{1+c}, unexpanded.
CycloProduct eps_n(const TowerLevel& T);

/// Norm from F to a subfield Fp of an element x of F.
CycloElement norm_to_subfield(const CycloElement& x, const AbelianField& F,
                              const AbelianField& Fp);

struct NormRelationCheck {
  AbelianField F, Fp;
  std::vector<i64> primes;  // primes dividing f_F but not f_Fp
  bool relation_ok;
  bool absolute_norm_ok;    // N_{F/Q} eps_F = r or 1
  Rational absolute_norm;
};

/// Checks N_{F/F'} eps_F = prod_r (1 - sigma_r^{-1}) eps_{F'} for every pair
/// Q != F' <= F of conductor at most f_max.
std::vector<NormRelationCheck> verify_norm_relations(i64 f_max);

}  // namespace iwasawa
