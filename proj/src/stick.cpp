#include "iwasawa/stick.hpp"

namespace iwasawa {

namespace {

void require_r(i64 r) {
  if (r < 3) throw std::invalid_argument("theta: need r >= 3");
}

RationalGR to_rational_gr(const ZmodGR& x) {
  return x.map(Rational(0), [](const Zmod& z) { return Rational(z.value()); });
}

RationalGR sigma_minus(const GroupPtr& G, i64 a, i64 scalar) {
  RationalGR x = rational_zero(G);
  x[G->index_of(a)] += 1;
  x[0] -= scalar;
  return x;
}

i64 exact_power_of(i64 r, i64 p) {
  int k = 0;
  i64 s = r;
  while (s % p == 0) {
    s /= p;
    ++k;
  }
  return s == 1 ? k : -1;
}

}  // namespace

RationalGR theta_sum_formula(i64 r) {
  require_r(r);
  auto G = FiniteAbelianGroup::units(r);
  RationalGR t = rational_zero(G);
  for (i64 a = 1; a < r; ++a) {
    if (gcd(a, r) != 1) continue;
    Rational c = Rational(a, r) - Rational(1, 2);
    c.canonicalize();
    t[G->index_of(invmod(a, r))] -= c;
  }
  return t;
}

CycloElement truncated_L0(const DirichletChar& chi, i64 r) {
  const i64 E = chi.value_order();
  CycloElement L = -bernoulli_b1(chi);
  if (L.conductor() != E) L = L.lift(lcm(L.conductor(), E)).descend(E);
  auto prim = chi.primitive();
  for (i64 l : prime_factors(r)) {
    if (prim.conductor() % l == 0) continue;
    CycloElement v = prim.exact(l);
    if (v.conductor() != E) v = v.lift(lcm(v.conductor(), E)).descend(E);
    L = L * (CycloElement::one(E) - v);
  }
  return L;
}

RationalGR theta_character_side(i64 r) {
  require_r(r);
  auto G = FiniteAbelianGroup::units(r);
  const int d = G->order();
  const i64 E = carmichael(r);
  std::vector<CycloElement> acc(d, CycloElement::zero(E));
  for (const auto& chi : dirichlet_characters(r)) {
    CycloElement L = truncated_L0(chi, r);
    if (L.is_zero()) continue;
    const i64 scale = E / chi.value_order();
    for (int g = 0; g < d; ++g) acc[g] += L.mul_root(scale * chi.exponent(G->rep(g)));
  }
  RationalGR t = rational_zero(G);
  for (int g = 0; g < d; ++g) {
    Rational c = acc[g].to_rational() / d;
    c.canonicalize();
    t[g] = c;
  }
  return t;
}

ThetaElement theta(i64 r) {
  auto s = theta_sum_formula(r);
  return {r, s, s == theta_character_side(r)};
}

CycloGR gauss_element(i64 r) {
  if (r < 2) throw std::invalid_argument("gauss_element: need r >= 2");
  auto G = FiniteAbelianGroup::units(r);
  CycloGR x(G, CycloElement::zero(r));
  for (int g = 0; g < G->order(); ++g) x[g] = CycloElement::root_power(r, G->rep(g));
  return x;
}

i64 chi_g_inf(i64 p, int M) {
  const i64 N = ipow(p, M);
  return mulmod(teichmuller(primitive_root(p), p, M), 1 + p, N);
}

IdealLattice integrality_ideal(const RationalGR& x, i64 p, int k, int M) {
  if (M < k) throw std::invalid_argument("integrality_ideal: need M >= k");
  const auto& G = x.group();
  const int d = G.order();
  RationalGR xs = x.scaled(Rational(ipow(p, k)));
  if (k == 0) return IdealLattice::full(x.group_ptr(), p, M);
  ZmodGR xk = reduce_mod(xs, p, k);
  std::vector<std::vector<i64>> T;
  for (int a = 0; a < d; ++a) {
    std::vector<i64> row(d);
    for (int j = 0; j < d; ++j) row[j] = xk[G.mul(a, G.inv(j))].value();
    T.push_back(row);
  }
  auto ker = kernel_mod(T, p, k, d);
  auto rows = ker.generators();
  const i64 pk = ipow(p, k);
  for (int j = 0; j < d; ++j) {
    std::vector<i64> e(d, 0);
    e[j] = pk;
    rows.push_back(e);
  }
  return IdealLattice(x.group_ptr(), ModLattice::span(p, M, d, rows), 0);
}

ThreeIdealReport three_ideal_lemma_check(i64 p, int n, int guard) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("three_ideal_lemma_check: p must be an odd prime");
  if (n < 0 || guard < 0) throw std::invalid_argument("three_ideal_lemma_check: bad level or guard");
  const i64 r = ipow(p, n + 1);
  const int Mw = n + 1 + guard;
  const i64 N = ipow(p, Mw);
  auto G = FiniteAbelianGroup::units(r);

  const i64 u = chi_g_inf(p, Mw);
  ZmodGR gen = zmod_basis(G, G->index_of(u), N) - zmod_basis(G, 0, N).scaled(Zmod(u, N));
  auto I1 = IdealLattice::span_snf(G, p, Mw, {gen}, true);

  // a and a + p^Mw give the same element, so odd a coprime to p up to 2 p^Mw
  // reduce to all units modulo p^Mw
  std::vector<ZmodGR> mu;
  for (i64 a = 1; a < N; ++a) {
    if (a % p == 0) continue;
    mu.push_back(zmod_basis(G, G->index_of(a), N) - zmod_basis(G, 0, N).scaled(Zmod(a, N)));
  }
  auto I2 = IdealLattice::span_snf(G, p, Mw, mu, false);

  auto I3 = integrality_ideal(theta_sum_formula(r), p, n + 1, Mw);

  ThreeIdealReport rep{p, n, Mw, I1, I2, I3, false, false};
  rep.equal = I1.equals_at(I2, n + 1) && I2.equals_at(I3, n + 1) && I1.equals_at(I3, n + 1);
  rep.equal_at_precision = I1.lattice() == I2.lattice() && I2.lattice() == I3.lattice();
  return rep;
}

SnReport fS_via_formula(i64 p, int n, int M) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("fS_via_formula: p must be an odd prime");
  if (M < n + 2) throw std::invalid_argument("fS_via_formula: need M >= n + 2");
  const i64 r = ipow(p, n + 1);
  auto G = FiniteAbelianGroup::units(r);
  const int d = G->order();
  const RationalGR th = theta_sum_formula(r);
  // theta has p-denominator p^{n+1}: work n+1 digits deeper and drop them
  const int Mw = M + n + 1;
  auto I = integrality_ideal(th, p, n + 1, Mw);
  std::vector<ZmodGR> gens;
  for (const auto& y : I.basis_mod()) gens.push_back(reduce_mod(th * to_rational_gr(y), p, M));
  SnReport rep{IdealLattice::span_snf(G, p, M, gens, true), zmod_zero(G, ipow(p, M)), false, false, false, 0};
  const i64 u = chi_g_inf(p, Mw);
  try {
    rep.theta_tilde = reduce_mod(th * sigma_minus(G, u, u), p, M);
    rep.theta_tilde_integral = true;
  } catch (const std::domain_error&) {
    rep.theta_tilde_integral = false;
  }
  if (rep.theta_tilde_integral) {
    auto P = IdealLattice::span_snf(G, p, M, {rep.theta_tilde}, true);
    rep.principal = P.lattice() == rep.fS.lattice();
  }
  rep.in_minus_part = true;
  for (const auto& b : rep.fS.basis_mod())
    if (!plus_part(b).is_zero()) rep.in_minus_part = false;
  rep.index_in_minus = rep.fS.log_index() - M * (d / 2);
  return rep;
}

IdealLattice stickelberger_ideal(i64 r, i64 p, int M) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("stickelberger_ideal: p must be an odd prime");
  if (exact_power_of(r, p) < 1) throw std::invalid_argument("stickelberger_ideal: r must be a power of p");
  if (M < 1) throw std::invalid_argument("stickelberger_ideal: need M >= 1");
  auto G = FiniteAbelianGroup::units(r);
  const RationalGR th = theta_sum_formula(r);
  const i64 bound = std::max(r, ipow(p, M));
  std::vector<ZmodGR> gens;
  for (i64 a = 1; a < bound; ++a) {
    if (a % p == 0) continue;
    gens.push_back(reduce_mod(th * sigma_minus(G, a, a), p, M));
  }
  return IdealLattice::span_snf(G, p, M, gens, false);
}

}  // namespace iwasawa
