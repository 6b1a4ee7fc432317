#pragma once

#include <vector>

#include "iwasawa/characters.hpp"
#include "iwasawa/lattice.hpp"

namespace iwasawa {

/// theta_r in Q[G(r)], G(r) = (Z/r)^x.
struct ThetaElement {
  i64 r;
  RationalGR value;            // -sum (a/r - 1/2) sigma_a^{-1}
  bool matches_characters;     // equals sum_chi L_S(0, chi) e_{chi^{-1}}
};

RationalGR theta_sum_formula(i64 r);
/// sum over chi of L_{S_r}(0, chi) (1/|G|) sum_g chi(g) g, evaluated exactly
/// in Q(mu_E) and read back as rationals.
RationalGR theta_character_side(i64 r);
/// L_{S_r}(0, chi) = -B_{1,chi} prod_{l | r} (1 - chi(l)), exactly.
CycloElement truncated_L0(const DirichletChar& chi, i64 r);

ThetaElement theta(i64 r);

/// sum_a xi_r^a sigma_a in Q(mu_r)[G(r)].
CycloGR gauss_element(i64 r);

/// chi_cyc(g_inf) for the fixed topological generator g_inf of Z_p^x:
/// Teichmuller(r0) (1 + p), r0 the least primitive root, modulo p^M.
i64 chi_g_inf(i64 p, int M);

/// {y in Z_p[G] : x y in Z_p[G]} for x in Q[G] with p-power denominator at
/// most p^k, modulo p^M.
IdealLattice integrality_ideal(const RationalGR& x, i64 p, int k, int M);

struct ThreeIdealReport {
  i64 p;
  int n;
  int M;                      // working precision n + 1 + guard
  IdealLattice gen_ideal;     // (g_n - chi_cyc(g_inf))
  IdealLattice mu_ideal;      // <sigma_a - a : (a, 2p) = 1>
  IdealLattice int_ideal;     // {y : theta_n y integral}
  bool equal;                 // pairwise, modulo p^{n+1}
  bool equal_at_precision;    // pairwise, modulo p^M
};

ThreeIdealReport three_ideal_lemma_check(i64 p, int n, int guard = 2);

struct SnReport {
  IdealLattice fS;            // theta_n {y : theta_n y integral}
  ZmodGR theta_tilde;         // (g_n - chi_cyc(g_inf)) theta_n mod p^M
  bool theta_tilde_integral;
  bool principal;             // fS = (theta_tilde)
  bool in_minus_part;
  int index_in_minus;         // log_p [Z/p^M[G]^- : fS]
};

/// K = Q, M >= n + 2.
SnReport fS_via_formula(i64 p, int n, int M);

/// Z_p-span of theta (sigma_a - a), r = p^{n+1}, modulo p^M.
IdealLattice stickelberger_ideal(i64 r, i64 p, int M);

}  // namespace iwasawa
