#include "iwasawa/lvalues.hpp"

#include <cmath>
#include <stdexcept>

#include "iwasawa/classgrp.hpp"
#include "iwasawa/stick.hpp"

namespace iwasawa {

namespace {

const long double kPi = std::acos(-1.0L);

Complex root_of_unity(i64 a, i64 f) { return std::polar(1.0L, 2 * kPi * static_cast<long double>(mod(a, f)) / f); }

// prod_{q in S, q not dividing f_chi} (1 - chi(q) q^{-s}) for s = 0, 1
Complex euler_factors(const DirichletChar& prim, const std::vector<i64>& S, int s) {
  Complex e = 1;
  for (i64 q : S)
    if (prim.modulus() % q != 0) e *= 1.0L - prim.value(q) / (s == 0 ? 1.0L : static_cast<long double>(q));
  return e;
}

i64 modulus_with(i64 f, const std::vector<i64>& S) {
  i64 m = f;
  for (i64 q : S)
    if (m % q != 0) m *= q;
  return m;
}

}  // namespace

Complex gauss_sum(const DirichletChar& chi) {
  auto prim = chi.primitive();
  const i64 f = prim.modulus();
  Complex s = 0;
  for (i64 a = 1; a <= f; ++a) s += prim.value(a) * root_of_unity(a, f);
  return s;
}

long double digamma(long double x) {
  static const std::vector<long double> B2k = [] {
    auto B = bernoulli_numbers(40);
    std::vector<long double> r;
    for (int k = 1; k <= 20; ++k) r.push_back(B[2 * k].get_d());
    return r;
  }();
  long double acc = 0;
  while (x < 30) {
    acc -= 1 / x;
    x += 1;
  }
  long double s = std::log(x) - 1 / (2 * x);
  long double x2 = x * x, pw = x2;
  for (int k = 1; k <= 20; ++k) {
    s -= B2k[k - 1] / (2 * k * pw);
    pw *= x2;
  }
  return acc + s;
}

CycloElement L0_value(const DirichletChar& chi, const std::vector<i64>& S) {
  auto prim = chi.primitive();
  CycloElement v = -bernoulli_b1(prim);
  const i64 E = v.conductor();
  for (i64 q : S)
    if (prim.modulus() % q != 0) v = v * (CycloElement::one(E) - prim.exact(q).lift(E));
  return v;
}

Complex L1_functional_equation(const DirichletChar& chi, const std::vector<i64>& S) {
  if (chi.is_trivial()) throw std::invalid_argument("L(1, chi): pole at the trivial character");
  auto prim = chi.primitive();
  const i64 f = prim.modulus();
  const Complex tau = gauss_sum(prim);
  Complex L;
  if (prim.is_odd()) {
    L = Complex(0, kPi) * tau * bernoulli_b1(prim.conj()).embed() / static_cast<long double>(f);
  } else {
    Complex s = 0;
    for (i64 a = 1; a < f; ++a)
      if (prim.is_unit(a)) s += std::conj(prim.value(a)) * std::log(std::abs(1.0L - root_of_unity(a, f)));
    L = -tau * s / static_cast<long double>(f);
  }
  return L * euler_factors(prim, S, 1);
}

Complex L1_direct(const DirichletChar& chi, const std::vector<i64>& S, int K) {
  if (chi.is_trivial()) throw std::invalid_argument("L(1, chi): pole at the trivial character");
  auto prim = chi.primitive();
  const i64 m = modulus_with(prim.modulus(), S);
  auto ch = prim.extend(m);
  Complex s = 0;
  for (i64 n = 1; n <= K * m; ++n)
    if (ch.is_unit(n)) s += ch.value(n) / static_cast<long double>(n);
  // sum_{k >= K} 1/(a + k m) = -(1/m) psi(K + a/m) + const, the constant
  // cancelling since chi sums to 0
  Complex tail = 0;
  for (i64 a = 1; a <= m; ++a)
    if (ch.is_unit(a)) tail += ch.value(a) * digamma(K + static_cast<long double>(a) / m);
  return s - tail / static_cast<long double>(m);
}

LValues L_values(const DirichletChar& chi, const std::vector<i64>& S) {
  if (chi.is_trivial()) throw std::invalid_argument("L_values: trivial character");
  LValues r{L0_value(chi, S), L1_functional_equation(chi, S), L1_direct(chi, S), 0};
  r.discrepancy = std::abs(r.L1 - r.L1_direct);
  return r;
}

Complex evaluate(const DirichletChar& chi, const ComplexGR& x) {
  const auto& G = x.group();
  Complex s = 0;
  for (int g = 0; g < G.order(); ++g) s += x[g] * chi.value(G.rep(g));
  return s;
}

ComplexGR embed(const CycloGR& x) {
  return x.map(Complex(0), [](const CycloElement& c) { return c.embed(); });
}

ComplexGR embed(const RationalGR& x) {
  return x.map(Complex(0), [](const Rational& q) { return Complex(q.get_d(), 0); });
}

ComplexGR a_minus_characters(const AbelianField& F) {
  if (F.is_real()) throw std::invalid_argument("a_minus: F is totally real");
  const i64 f = F.conductor();
  auto G = F.galois_group();
  const auto S = prime_factors(f);
  ComplexGR a(G, Complex(0));
  for (const auto& chi : characters_of_quotient(f, F.subgroup())) {
    if (!chi.is_odd()) continue;
    const Complex L = L1_functional_equation(chi, S);
    for (int g = 0; g < G->order(); ++g) a[g] += L * chi.value(G->rep(g));
  }
  return a.scaled(Complex(0, 1) / (kPi * G->order()));
}

ComplexGR a_minus_algebraic(const AbelianField& F) {
  if (F.is_real()) throw std::invalid_argument("a_minus: F is totally real");
  const i64 f = F.conductor();
  auto G = F.galois_group();
  ComplexGR x(G, Complex(0));
  for (int g = 0; g < G->order(); ++g) {
    // g(Tr(xi/(1 - xi))) = sum_{h in H} xi^{ah}/(1 - xi^{ah}), a = rep(g)
    Complex t = 0;
    for (i64 h : F.subgroup()) {
      Complex z = root_of_unity(mulmod(G->rep(g), h, f), f);
      t += z / (1.0L - z);
    }
    x[G->inv(g)] = t;
  }
  ComplexGR a = x - x.translate(G->conj());
  return a.scaled(Complex(1.0L / (2 * f), 0));
}

AMinusReport a_minus(const AbelianField& F) {
  AMinusReport r{a_minus_characters(F), a_minus_algebraic(F), 0, true};
  const int c = r.characters.group().conj();
  for (int g = 0; g < r.characters.size(); ++g) {
    r.residual = std::max(r.residual, std::abs(r.characters[g] - r.algebraic[g]));
    const int cg = r.characters.group().mul(c, g);
    if (std::abs(r.characters[cg] + r.characters[g]) > 1e-12L) r.minus_part = false;
    if (std::abs(r.algebraic[cg] + r.algebraic[g]) > 1e-12L) r.minus_part = false;
  }
  return r;
}

EfeReport equivariant_fe_check(i64 l) {
  if (l < 3) throw std::invalid_argument("equivariant_fe_check: l >= 3");
  auto G = FiniteAbelianGroup::units(l);
  const auto S = prime_factors(l);
  ComplexGR a(G, Complex(0));
  for (const auto& chi : dirichlet_characters(l)) {
    if (!chi.is_odd()) continue;
    const Complex L = L1_functional_equation(chi, S);
    for (int g = 0; g < G->order(); ++g) a[g] += L * chi.value(G->rep(g));
  }
  a = a.scaled(Complex(0, 1) / (kPi * G->order()));

  ComplexGR rhs(G, Complex(0));
  for (i64 r = 3; r <= l; ++r) {
    // r = 2 contributes nothing: theta_2 = -(1/2 - 1/2) sigma_1 = 0
    if (l % r != 0) continue;
    CycloGR At = gauss_element(r);
    const auto th = theta(r).value;
    CycloGR t = th.map(CycloElement::zero(r), [&](const Rational& q) { return CycloElement::from_rational(r, q); });
    auto m = make_quotient_map(G, At.group_ptr());
    rhs += corestriction(embed(At * t), m);
  }
  rhs = rhs.scaled(Complex(1.0L / l, 0));

  EfeReport rep{l, a.star(), rhs, 0};
  for (int g = 0; g < G->order(); ++g) rep.residual = std::max(rep.residual, std::abs(rep.lhs[g] - rep.rhs[g]));
  return rep;
}

}  // namespace iwasawa
