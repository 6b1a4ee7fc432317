#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "iwasawa/lattice.hpp"

namespace iwasawa {

/// A p-adic number known modulo p^accuracy.
struct Padic {
  Rational value;
  int accuracy;
};

/// Element p^{-k} c of Q_p(zeta), zeta a primitive p^{n+1}-th root of unity,
/// on the power basis of Z_p[zeta] = Z_p[x]/Phi_{p^{n+1}}(x). The numerators
/// c are known modulo p^W, so the element is known modulo p^{W-k} Z_p[zeta].
class LocalElement {
 public:
  LocalElement(i64 p, int n, int W);  // zero
  static LocalElement one(i64 p, int n, int W);
  static LocalElement from_rational(i64 p, int n, int W, const Rational& q);
  static LocalElement zeta_power(i64 p, int n, int W, i64 e);
  static LocalElement from_coeffs(i64 p, int n, int W, std::vector<Integer> c, int k = 0);

  i64 p() const { return p_; }
  int level() const { return n_; }
  int degree() const { return static_cast<int>(c_.size()); }
  int precision() const { return W_; }
  int denom_exp() const { return k_; }
  int accuracy() const { return W_ - k_; }
  const std::vector<Integer>& numerators() const { return c_; }
  Rational coeff(int i) const;
  /// Lower bound for v_p, capped at the accuracy.
  int valuation() const;
  bool is_zero() const { return valuation() >= accuracy(); }
  /// u = 1 modulo (zeta - 1).
  bool is_principal_unit() const;

  LocalElement operator+(const LocalElement& o) const;
  LocalElement operator-(const LocalElement& o) const;
  LocalElement operator-() const;
  LocalElement operator*(const LocalElement& o) const;
  LocalElement operator*(const Integer& z) const;
  LocalElement pow(i64 e) const;
  /// x / p^s; the accuracy drops by s.
  LocalElement div_p_power(int s) const;
  /// Inverse of a unit of Z_p[zeta] by Newton iteration.
  LocalElement inverse() const;
  /// sigma_b : zeta -> zeta^b.
  LocalElement galois(i64 b) const;
  Padic trace() const;
  /// Same element with the numerators cut to precision W' <= W.
  LocalElement with_precision(int Wp) const;

 private:
  void reduce();
  void normalize();
  LocalElement aligned(int k) const;
  void check(const LocalElement& o) const;
  i64 p_;
  int n_;
  int W_;
  int k_ = 0;
  Integer mod_;
  std::vector<Integer> c_;
};

/// log_p of a principal unit: u is raised to p^s until u^{p^s} = 1 mod p,
/// the series is summed there, and the result divided by p^s.
LocalElement padic_log(const LocalElement& u);
/// exp of x with v_p(x) >= 1.
LocalElement padic_exp(const LocalElement& x);

/// p^{-(n+1)} sum_{i=0}^{n} zeta_i, zeta_i = zeta^{p^{n-i}}.
LocalElement b_element(i64 p, int n, int W);

/// Numerator precision that leaves declared accuracy M after log, the trace
/// pairing with b_n and multiplication by theta_n.
int local_working_precision(i64 p, int n, int M);

/// 1 + (zeta - 1) r with r uniform over the power basis modulo p^W.
LocalElement random_principal_unit(i64 p, int n, int W, std::mt19937_64& rng);
/// u / c(u), a unit on which complex conjugation acts by inversion.
LocalElement minus_unit(const LocalElement& u);

/// Element of Q_p[G_n] known modulo p^accuracy, G_n = (Z/p^{n+1})^x.
struct PadicGR {
  RationalGR value;
  int accuracy;
};

/// Coefficients agree modulo p^acc, acc = min of the accuracies.
bool equal_within(const PadicGR& a, const PadicGR& b);
/// All coefficients lie in Z_p modulo p^accuracy.
bool is_integral(const PadicGR& x);
/// Representatives p^{-k} (c mod p^{M+k}); used for stable output.
PadicGR canonical(const PadicGR& x, int M);

/// sum_g T_n(b_n, g(log u)) g^{-1}. Throws std::runtime_error when fewer
/// than M digits survive.
PadicGR w_map(const LocalElement& u, int M);

/// sum_g (1/f_n) Tr(xi/(1 - xi) log(g^{-1} e_- u)) g with f_n = p^{n+1};
/// e_- acts through the logarithm.
PadicGR s_map(const LocalElement& u, int M);

struct SMapCheck {
  PadicGR s;
  PadicGR theta_w;
  bool integral;
  bool factorization;   // s = theta_n w, to the common accuracy
};
SMapCheck check_s_map(const LocalElement& u, int M);

/// Z_p[G_n](-theta_n^* + (2/p^n) sum g) + I(Z_p[G_n]), to floor F.
IdealLattice A_ideal(i64 p, int n, int F);
/// Minus part of A_n equals that of Z_p[G_n] theta_n^* + Z_p[G_n].
bool A_ideal_minus_check(i64 p, int n, int F);

struct WImageReport {
  IdealLattice image;        // sampled image, to floor M
  IdealLattice dual;         // A_n^*
  int samples;
  int last_growth;           // sample index after which the lattice stayed put
  bool stabilized;           // at least `window` quiet samples at the end
  bool equal_minus;          // minus parts agree at floor M
  bool equal;                // whole lattices agree at floor M
};
WImageReport w_image_check(i64 p, int n, int M, int samples, std::uint64_t seed, int window = 10);

/// f_j modulo (p^M, (1+T)^{p^n} - 1), read off theta_n's omega^{1-j}
/// component with gamma(n) = sigma_{1+p} sent to 1+T.
struct PowerSeriesTruncation {
  i64 p;
  int j;
  int n;
  int M;
  std::vector<i64> gamma_coeffs;  // coefficient of (1+T)^m, m < p^n
  std::vector<i64> T_coeffs;      // coefficient of T^m, m < p^n

  /// Weierstrass degree; throws std::runtime_error("insufficient level") if
  /// no coefficient below degree p^n is a unit.
  int lambda() const;
  bool mu_zero() const;
  /// f(kappa^s - 1) with kappa = 1 + p, an integer s of either sign; known
  /// modulo p^{min(M, n+1)}.
  i64 evaluate_at_kappa_power(i64 s) const;
  /// Reduction to level m <= n.
  PowerSeriesTruncation reduce_level(int m) const;
  bool operator==(const PowerSeriesTruncation& o) const;
};

PowerSeriesTruncation padic_L_truncation(i64 p, int j, int n, int M);

/// -(1 - p^{k-1}) B_k / k modulo p^m, for k = j mod p - 1: the value at
/// s = 1 - k from Bernoulli numbers.
i64 kummer_value(i64 p, int k, int m);

/// v_p(B_{1,omega^{-1}}), computed exactly in Q(mu_{p-1}) and checked
/// against a Teichmuller sum; throws std::logic_error if they disagree.
int b1_omega_valuation(i64 p);

}  // namespace iwasawa
