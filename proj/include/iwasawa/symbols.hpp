#pragma once

#include <vector>

#include "iwasawa/fields.hpp"
#include "iwasawa/group_ring.hpp"

namespace iwasawa {

/// A rational prime q = 1 mod f_n together with the prime of K_n above it
/// selected by xi_{f_n} -> u, u of exact order f_n in F_q.
struct SplitPrimeData {
  i64 q;
  i64 p;
  int n;
  i64 f_n;
  GroupPtr G;   // G_n
  i64 u;
  i64 zeta;     // image of zeta_n = xi_{p^{n+1}}, i.e. u^{f_n / p^{n+1}}
  i64 pn1() const { return ipow(p, n + 1); }
};

/// Least u in [2, q) of multiplicative order exactly f modulo the prime q.
i64 least_root_of_order(i64 f, i64 q);

SplitPrimeData make_split_prime(const TowerLevel& T, i64 q, i64 u);

/// First `count` primes q >= q_min with q = 1 mod f_n. Throws
/// std::runtime_error once candidates exceed q_limit.
std::vector<SplitPrimeData> find_split_primes(const TowerLevel& T, int count, i64 q_min = 2,
                                              i64 q_limit = i64(1) << 36);

/// Discrete log of x^{(q-1)/p^{n+1}} to base Q.zeta, by Pohlig-Hellman on the
/// p-part. x must be a nonzero residue.
i64 symbol_of_residue(i64 x, const SplitPrimeData& Q);

/// {beta / q}_n in Z/p^{n+1}. beta must have conductor dividing f_n; throws
/// std::domain_error if beta vanishes (or has a pole) modulo the prime.
i64 power_residue_symbol(const CycloElement& beta, const SplitPrimeData& Q);
i64 power_residue_symbol(const CycloProduct& beta, const SplitPrimeData& Q);

/// sum_g {g^{-1} alpha / q}_n g in Z/p^{n+1}[G_n].
ZmodGR frobenius_pairing_row(const CycloElement& alpha, const SplitPrimeData& Q);
ZmodGR frobenius_pairing_row(const CycloProduct& alpha, const SplitPrimeData& Q);

/// chi_cyc on G_n modulo p^{n+1}, indexed like G_n.
std::vector<i64> cyclotomic_character(const TowerLevel& T, int k);

}  // namespace iwasawa
