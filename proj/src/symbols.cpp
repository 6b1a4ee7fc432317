#include "iwasawa/symbols.hpp"

namespace iwasawa {

i64 least_root_of_order(i64 f, i64 q) {
  if ((q - 1) % f != 0) throw std::invalid_argument("least_root_of_order: f does not divide q - 1");
  if (f == 1) return 1;
  auto ls = prime_factors(f);
  for (i64 u = 2; u < q; ++u) {
    if (powmod(u, f, q) != 1) continue;
    bool exact = true;
    for (i64 l : ls)
      if (powmod(u, f / l, q) == 1) {
        exact = false;
        break;
      }
    if (exact) return u;
  }
  throw std::logic_error("least_root_of_order: no root found");
}

SplitPrimeData make_split_prime(const TowerLevel& T, i64 q, i64 u) {
  if (!is_prime(q) || (q - 1) % T.f_n != 0)
    throw std::invalid_argument("make_split_prime: q must be a prime = 1 mod f_n");
  if (powmod(u, T.f_n, q) != 1 || multiplicative_order(u, q) != T.f_n)
    throw std::invalid_argument("make_split_prime: u must have order f_n");
  SplitPrimeData Q{q, T.p, T.n, T.f_n, T.G, u, 0};
  Q.zeta = powmod(u, T.f_n / T.pn1(), q);
  return Q;
}

std::vector<SplitPrimeData> find_split_primes(const TowerLevel& T, int count, i64 q_min,
                                              i64 q_limit) {
  if (count < 1) throw std::invalid_argument("find_split_primes: count must be positive");
  std::vector<SplitPrimeData> out;
  const i64 f = T.f_n;
  i64 k = q_min <= 1 ? 1 : (q_min - 1 + f - 1) / f;
  if (k < 1) k = 1;
  for (;; ++k) {
    i64 q = k * f + 1;
    if (q > q_limit) throw std::runtime_error("find_split_primes: search exhausted");
    if (!is_prime(q)) continue;
    out.push_back(make_split_prime(T, q, least_root_of_order(f, q)));
    if (static_cast<int>(out.size()) == count) return out;
  }
}

i64 symbol_of_residue(i64 x, const SplitPrimeData& Q) {
  const i64 q = Q.q;
  x = mod(x, q);
  if (x == 0) throw std::domain_error("power_residue_symbol: element vanishes modulo q");
  const i64 N = Q.pn1();
  i64 y = powmod(x, (q - 1) / N, q);
  const i64 gamma = powmod(Q.zeta, N / Q.p, q);  // order p
  i64 s = 0, pi = 1;
  for (int i = 0; i <= Q.n; ++i) {
    // (zeta^{-s} y)^{p^{n-i}} = gamma^{d_i}
    i64 h = mulmod(y, powmod(Q.zeta, -s, q), q);
    h = powmod(h, ipow(Q.p, Q.n - i), q);
    i64 d = -1, g = 1;
    for (i64 t = 0; t < Q.p; ++t) {
      if (g == h) {
        d = t;
        break;
      }
      g = mulmod(g, gamma, q);
    }
    if (d < 0) throw std::logic_error("power_residue_symbol: discrete log failed");
    s += d * pi;
    pi *= Q.p;
  }
  return mod(s, N);
}

namespace {

i64 xi_image(i64 f, const SplitPrimeData& Q) {
  if (Q.f_n % f != 0) throw std::invalid_argument("power_residue_symbol: conductor does not divide f_n");
  return powmod(Q.u, Q.f_n / f, Q.q);
}

template <class X>
ZmodGR row(const X& alpha, const SplitPrimeData& Q) {
  const auto& G = *Q.G;
  const i64 N = Q.pn1();
  ZmodGR r = zmod_zero(Q.G, N);
  for (int g = 0; g < G.order(); ++g) {
    i64 ginv = G.rep(G.inv(g));
    r[g] = Zmod(power_residue_symbol(alpha.galois(ginv), Q), N);
  }
  return r;
}

}  // namespace

i64 power_residue_symbol(const CycloElement& beta, const SplitPrimeData& Q) {
  return symbol_of_residue(beta.reduce_mod(Q.q, xi_image(beta.conductor(), Q)), Q);
}

i64 power_residue_symbol(const CycloProduct& beta, const SplitPrimeData& Q) {
  return symbol_of_residue(beta.reduce_mod(Q.q, xi_image(beta.conductor(), Q)), Q);
}

ZmodGR frobenius_pairing_row(const CycloElement& alpha, const SplitPrimeData& Q) { return row(alpha, Q); }
ZmodGR frobenius_pairing_row(const CycloProduct& alpha, const SplitPrimeData& Q) { return row(alpha, Q); }

std::vector<i64> cyclotomic_character(const TowerLevel& T, int k) {
  if (k > T.n + 1) throw std::invalid_argument("cyclotomic_character: precision above p^{n+1}");
  i64 m = ipow(T.p, k);
  std::vector<i64> v;
  for (i64 r : T.G->reps()) v.push_back(r % m);
  return v;
}

}  // namespace iwasawa
