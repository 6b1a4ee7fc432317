#pragma once

#include <vector>

#include "iwasawa/characters.hpp"
#include "iwasawa/fields.hpp"
#include "iwasawa/group_ring.hpp"

namespace iwasawa {

/// tau(chi) = sum_a chi(a) exp(2 pi i a / f) for the primitive character
/// inducing chi, f its conductor.
Complex gauss_sum(const DirichletChar& chi);

/// psi(x) by upward recurrence and the asymptotic series with 20 Bernoulli
/// terms.
long double digamma(long double x);

/// L_S(0, chi) = -B_{1,chi} prod_{q in S, q not dividing f_chi} (1 - chi(q)).
CycloElement L0_value(const DirichletChar& chi, const std::vector<i64>& S);
/// L_S(1, chi) from s = 0 data: for odd chi the functional equation
/// L(1, chi) = pi i tau(chi) B_{1, chi-bar} / f, for even chi the
/// logarithmic formula; then the Euler factors at S.
Complex L1_functional_equation(const DirichletChar& chi, const std::vector<i64>& S);
/// L_S(1, chi) summed directly for the character induced to modulus
/// f_chi prod S, with a digamma tail after K periods.
Complex L1_direct(const DirichletChar& chi, const std::vector<i64>& S, int K = 40);

struct LValues {
  CycloElement L0;
  Complex L1;
  Complex L1_direct;
  long double discrepancy;
};
/// Throws std::invalid_argument for trivial chi.
LValues L_values(const DirichletChar& chi, const std::vector<i64>& S);

/// chi(x) = sum_g x_g chi(g) for x in C[(Z/f)^x / H].
Complex evaluate(const DirichletChar& chi, const ComplexGR& x);
ComplexGR embed(const CycloGR& x);
ComplexGR embed(const RationalGR& x);

/// (i/pi) sum_{chi odd} L_S(1, chi) e_{chi^{-1}}, S the primes dividing f_F.
ComplexGR a_minus_characters(const AbelianField& F);
/// (1/2f)(1 - c) sum_g g(Tr_{Q(mu_f)/F}(xi/(1 - xi))) g^{-1}.
ComplexGR a_minus_algebraic(const AbelianField& F);

struct AMinusReport {
  ComplexGR characters;
  ComplexGR algebraic;
  long double residual;
  bool minus_part;       // c a = -a on both sides, to 1e-12
};
/// Throws std::invalid_argument for totally real F.
AMinusReport a_minus(const AbelianField& F);

struct EfeReport {
  i64 l;
  ComplexGR lhs;   // a^{-,*} from L(1, chi)
  ComplexGR rhs;   // (1/l) sum_{r | l, r != 1} cores(A_r theta_r)
  long double residual;
};
EfeReport equivariant_fe_check(i64 l);

}  // namespace iwasawa
