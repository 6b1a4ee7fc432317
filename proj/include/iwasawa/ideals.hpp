#pragma once

#include <string>
#include <vector>

#include "iwasawa/classgrp.hpp"
#include "iwasawa/lattice.hpp"
#include "iwasawa/symbols.hpp"

namespace iwasawa {

/// The ideal of R_n[G_n^+] (R_n = Z/p^{n+1}) spanned by the symbol rows of
/// eps_n over sampled split primes.
struct DbarIdeal {
  TowerLevel T;
  IdealLattice lattice;            // over G_n^+, modulo p^{n+1}
  std::vector<ZmodGR> rows;        // (1/2) * rows over G_n, one per prime
  std::vector<i64> primes;
  int quiet_run = 0;               // consecutive primes without growth
  bool stabilized = false;
};

struct SampleOptions {
  int stabilize = 10;
  int cap = 200;
  i64 q_min = 2;
  /// Skip primes whose index in the split-prime sequence has this parity
  /// (-1: keep all); used to draw disjoint samples.
  int parity = -1;
};

DbarIdeal sample_dbar(const TowerLevel& T, const SampleOptions& opt = {});

/// pi_* (1/2) row: the generator of Dbar attached to one prime, over G_n^+.
ZmodGR dbar_generator(const TowerLevel& T, const SplitPrimeData& Q);

struct AnnihilationEntry {
  int basis_index;
  int generator;      // class index
  int result;         // class of x . c
  bool ok;
};

struct AnnihilationReport {
  bool augmentation;  // the I(R[G^+]) * Dbar test was used
  bool vacuous;       // A has trivial p-part
  std::vector<AnnihilationEntry> entries;
  bool all_ok() const;
};

/// Action of x in Z/p^{n+1}[G_0^+] on Cl(K) for K = Q(sqrt D) real quadratic
/// with K_0^+ = K (so p = 3): g acts as identity or as the Galois
/// automorphism according to its restriction to K.
int act_on_class(const ZmodGR& x, int cls, const FormClassGroup& C);

/// Every basis element of D (or of I(R[G^+]) D when n < n0 or when forced)
/// applied to every generator of the p-part of C must land in p^{n+1} A.
AnnihilationReport check_annihilation(const DbarIdeal& D, const FormClassGroup& C,
                                      bool force_augmentation = false);

struct DescentReport {
  std::vector<i64> primes;   // r | f_{K_0}, r not dividing f_{F_0}
  bool equal;
  int log_index_image;       // of pi(D(K))
  int log_index_expected;    // of x D(F)
};

/// pi(D(K)) = x_{K/F} D(F) with x = prod_r (1 - sigma_r^{-1}) in R_n[G_n^+(F)].
DescentReport descend_check(const DbarIdeal& Dk, const DbarIdeal& Df);

/// Sum of the elements of the decomposition group of r in G_n^+.
ZmodGR decomposition_norm(const TowerLevel& T, i64 r);

/// N_{D_r} x = 0 for every basis element x of D and every r | f_n.
bool norm_kill_check(const DbarIdeal& D, std::vector<i64>* failing = nullptr);

/// {y : x y = 0 for all x in I}.
IdealLattice annihilator_ideal(const IdealLattice& I);

struct DualReport {
  bool equal;
  int log_index_dual;
  int log_index_dbar;
};

/// K = Q only. The units side: a presentation of R_n[G_n^+] eta_n by its
/// relations (empty when eta_n generates a free module). The dual side is
/// {F(eta_n)} = {y : relations . y = 0}, compared with D.
DualReport dual_characterization_check(const DbarIdeal& D, const std::vector<ZmodGR>& relations);

/// Rows at level m projected to level n agree with rows computed at level n
/// for the primes below; returns the number of primes compared, or -1 on a
/// mismatch.
int mod_compatibility_check(const AbelianField& K, i64 p, int n, int m, int count);

}  // namespace iwasawa
