#pragma once

#include <map>
#include <string>
#include <vector>

#include "iwasawa/characters.hpp"
#include "iwasawa/fields.hpp"

namespace iwasawa {

/// Binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
  i64 a, b, c;
  i64 disc() const { return b * b - 4 * a * c; }
  bool operator<(const QuadForm& o) const {
    return a != o.a ? a < o.a : b != o.b ? b < o.b : c < o.c;
  }
  bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

bool is_fundamental_discriminant(i64 D);

/// Reduced indefinite forms satisfy |sqrt(D) - 2|a|| < b < sqrt(D).
bool is_reduced_indefinite(const QuadForm& f);
/// The reduction operator rho, a proper equivalence.
QuadForm rho(const QuadForm& f);
/// Apply rho until reduced.
QuadForm reduce_indefinite(const QuadForm& f);
/// Dirichlet composition of primitive forms of one discriminant with a > 0.
QuadForm compose(const QuadForm& f, const QuadForm& g);

/// Narrow class group of a real quadratic order of fundamental discriminant
/// D > 0, one reduced cycle per class. The wide class group is the quotient
/// by the class of the form (-1, b, c); for odd p both have the same p-part.
class FormClassGroup {
 public:
  explicit FormClassGroup(i64 D);

  i64 disc() const { return D_; }
  int narrow_order() const { return static_cast<int>(cycles_.size()); }
  int wide_order() const { return narrow_order() / static_cast<int>(element_order(minus_one_)); }
  /// True when the fundamental unit has norm -1.
  bool norm_minus_one() const { return minus_one_ == 0; }
  const std::vector<std::vector<QuadForm>>& cycles() const { return cycles_; }
  QuadForm representative(int i) const;  // a form with a > 0 in cycle i

  int class_of(const QuadForm& f) const;
  int identity() const { return 0; }
  int mul(int i, int j) const { return table_[i][j]; }
  int inv(int i) const { return inv_[i]; }
  int pow(int i, i64 e) const;
  int element_order(int i) const;
  /// Nontrivial automorphism of Q(sqrt D): (a, b, c) -> (a, -b, c).
  int galois(int i) const { return conj_[i]; }
  /// Invariant factors of the narrow group, d_1 | d_2 | ...
  std::vector<i64> invariant_factors() const;
  /// Classes of order a power of p (p odd), which map isomorphically to the
  /// p-part of the wide group.
  std::vector<int> p_part(i64 p) const;
  /// Generators of the p-part (a minimal set, greedy by order).
  std::vector<int> p_part_generators(i64 p) const;

 private:
  i64 D_;
  std::vector<std::vector<QuadForm>> cycles_;
  std::map<QuadForm, int> index_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_, conj_;
  int minus_one_;
};

/// Wide class number of Q(sqrt D) from the analytic class number formula,
/// h log(eps) = -sum_{0<a<D/2} chi(a) log sin(pi a / D), with eps from the
/// continued fraction of (b + sqrt D)/2. Independent of form composition.
i64 analytic_class_number(i64 D);

/// Fundamental discriminants 0 < D <= D_max with p | h(Q(sqrt D)).
std::vector<i64> search_real_quadratic(i64 p, i64 D_max, int count);

/// Exact Bernoulli numbers B_0..B_k (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int k);
/// B_k + sum_{(l-1) | k} 1/l is an integer, for even k >= 2.
bool von_staudt_clausen(const Rational& Bk, int k);

/// h^-(Q(mu_m)) for m a power of an odd prime, exact.
Integer minus_class_number(i64 m);
/// Floating estimate of the same product (sanity check only).
long double minus_class_number_float(i64 m);

/// Even k <= min(k_max, p - 3) with p dividing the numerator of B_k.
std::vector<std::pair<i64, int>> herbrand_pairs(i64 p, int k_max);

struct MinkowskiCertificate {
  bool certified;
  long double bound;
  Integer abs_disc;
  std::string reason;
};

/// Certifies h = 1 for an abelian field of degree <= 3 when every prime
/// ideal of norm below the Minkowski bound is absent. Returns an uncertified
/// result otherwise. Throws std::invalid_argument for degree > 3.
MinkowskiCertificate minkowski_certify_h1(const AbelianField& F);

/// p does not divide h(Q(mu_{p^{n+1}})^+): certified at level 0 by Minkowski
/// and carried up the tower, which is totally ramified at one prime.
MinkowskiCertificate certify_plus_part_trivial(i64 p, int n);

}  // namespace iwasawa
