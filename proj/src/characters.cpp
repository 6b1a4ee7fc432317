#include "iwasawa/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace iwasawa {

DirichletChar::DirichletChar(i64 f, i64 E, std::vector<i64> exps) : f_(f), E_(E), k_(std::move(exps)) {
  if (static_cast<i64>(k_.size()) != f_) throw std::invalid_argument("DirichletChar: table size");
}

DirichletChar DirichletChar::trivial(i64 f) {
  std::vector<i64> k(f);
  for (i64 a = 0; a < f; ++a) k[a] = (gcd(a, f) == 1 || f == 1) ? 0 : -1;
  return DirichletChar(f, 1, k);
}

i64 DirichletChar::order() const {
  i64 g = E_;
  for (i64 k : k_)
    if (k >= 0) g = gcd(g, k);
  return E_ / g;
}

i64 DirichletChar::conductor() const {
  for (i64 d : divisors(f_)) {
    bool ok = true;
    for (i64 a = 1 % d; a < f_ && ok; a += d)
      if (k_[a] > 0) ok = false;
    if (ok) return d;
  }
  return f_;
}

bool DirichletChar::is_odd() const {
  if (f_ <= 2) return false;
  return k_[f_ - 1] != 0;
}

DirichletChar DirichletChar::primitive() const {
  i64 d = conductor();
  std::vector<i64> k(d, -1);
  for (i64 b = 0; b < d; ++b) {
    if (gcd(b, d) != 1 && d != 1) continue;
    for (i64 a = b; a < f_ + d; a += d) {
      if (gcd(a, f_) == 1) {
        k[b] = k_[a % f_];
        break;
      }
    }
  }
  if (d == 1) k[0] = 0;
  return DirichletChar(d, E_, k);
}

DirichletChar DirichletChar::extend(i64 F) const {
  if (F % f_ != 0) throw std::invalid_argument("extend: not a multiple of the modulus");
  std::vector<i64> k(F);
  for (i64 a = 0; a < F; ++a) k[a] = (gcd(a, F) == 1 || F == 1) ? k_[a % f_] : -1;
  return DirichletChar(F, E_, k);
}

DirichletChar DirichletChar::conj() const {
  std::vector<i64> k(k_);
  for (auto& x : k)
    if (x > 0) x = E_ - x;
  return DirichletChar(f_, E_, k);
}

DirichletChar DirichletChar::operator*(const DirichletChar& o) const {
  i64 F = lcm(f_, o.f_);
  i64 E = lcm(E_, o.E_);
  DirichletChar a = extend(F), b = o.extend(F);
  std::vector<i64> k(F);
  for (i64 x = 0; x < F; ++x)
    k[x] = a.k_[x] < 0 ? -1 : mod(a.k_[x] * (E / E_) + b.k_[x] * (E / o.E_), E);
  return DirichletChar(F, E, k);
}

bool DirichletChar::operator==(const DirichletChar& o) const {
  if (f_ != o.f_) return false;
  i64 E = lcm(E_, o.E_);
  for (i64 a = 0; a < f_; ++a) {
    if ((k_[a] < 0) != (o.k_[a] < 0)) return false;
    if (k_[a] >= 0 && k_[a] * (E / E_) != o.k_[a] * (E / o.E_)) return false;
  }
  return true;
}

Complex DirichletChar::value(i64 a) const {
  i64 k = exponent(a);
  if (k < 0) return {0, 0};
  long double t = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / E_;
  return {std::cos(t), std::sin(t)};
}

CycloElement DirichletChar::exact(i64 a) const {
  i64 k = exponent(a);
  if (k < 0) return CycloElement::zero(E_);
  return CycloElement::root_power(E_, k);
}

i64 DirichletChar::value_mod(i64 a, i64 root, i64 m) const {
  i64 k = exponent(a);
  if (k < 0) return 0;
  return powmod(root, k, m);
}

bool DirichletChar::kills(const std::vector<i64>& H) const {
  for (i64 h : H)
    if (exponent(h) > 0) return false;
  return true;
}

i64 carmichael(i64 f) {
  i64 r = 1;
  for (i64 l : prime_factors(f)) {
    int k = valuation(f, l);
    i64 c;
    if (l == 2) c = k <= 2 ? (k == 1 ? 1 : 2) : ipow(2, k - 2);
    else c = ipow(l, k - 1) * (l - 1);
    r = lcm(r, c);
  }
  return r;
}

namespace {

// Cyclic factors of (Z/f)^x: for each, its order and a discrete-log table
// over residues mod f.
struct Factor {
  i64 order;
  std::vector<i64> dlog;  // -1 off units
};

std::vector<Factor> unit_factors(i64 f) {
  std::vector<Factor> out;
  for (i64 l : prime_factors(f)) {
    int k = valuation(f, l);
    i64 q = ipow(l, k);
    std::vector<std::pair<i64, std::vector<i64>>> local;  // (order, dlog mod q)
    if (l == 2) {
      if (k == 1) continue;
      // -1 and, for k >= 3, 5
      std::vector<i64> d1(q, -1), d2(q, -1);
      i64 o5 = k >= 3 ? ipow(2, k - 2) : 1;
      i64 x = 1;
      for (i64 t = 0; t < o5; ++t) {
        d1[x] = 0;
        d2[x] = t;
        d1[q - x] = 1;
        d2[q - x] = t;
        x = mulmod(x, 5, q);
      }
      local.push_back({2, d1});
      if (k >= 3) local.push_back({o5, d2});
    } else {
      i64 g = primitive_root(l);
      if (k >= 2 && powmod(g, l - 1, l * l) == 1) g += l;
      i64 o = q / l * (l - 1);
      std::vector<i64> d(q, -1);
      i64 x = 1;
      for (i64 t = 0; t < o; ++t) {
        d[x] = t;
        x = mulmod(x, g, q);
      }
      local.push_back({o, d});
    }
    for (auto& [o, d] : local) {
      Factor F{o, std::vector<i64>(f, -1)};
      for (i64 a = 0; a < f; ++a)
        if (gcd(a, f) == 1) F.dlog[a] = d[a % q];
      out.push_back(std::move(F));
    }
  }
  return out;
}

}  // namespace

std::vector<DirichletChar> dirichlet_characters(i64 f) {
  if (f < 1) throw std::invalid_argument("dirichlet_characters: f must be positive");
  const i64 E = carmichael(f);
  auto factors = unit_factors(f);
  std::vector<DirichletChar> out;
  std::vector<i64> j(factors.size(), 0);
  while (true) {
    std::vector<i64> k(f, -1);
    for (i64 a = 0; a < f; ++a) {
      if (gcd(a, f) != 1 && f != 1) continue;
      i64 s = 0;
      for (size_t i = 0; i < factors.size(); ++i)
        s += j[i] * factors[i].dlog[a] % factors[i].order * (E / factors[i].order);
      k[a] = mod(s, E);
    }
    out.emplace_back(f, E, k);
    size_t i = 0;
    for (; i < factors.size(); ++i) {
      if (++j[i] < factors[i].order) break;
      j[i] = 0;
    }
    if (i == factors.size()) break;
  }
  return out;
}

std::vector<DirichletChar> characters_of_quotient(i64 f, const std::vector<i64>& H) {
  std::vector<DirichletChar> out;
  for (auto& chi : dirichlet_characters(f))
    if (chi.kills(H)) out.push_back(chi);
  return out;
}

CycloElement bernoulli_b1(const DirichletChar& chi) {
  const i64 E = chi.value_order();
  DirichletChar psi = chi.primitive();
  const i64 d = psi.modulus();
  if (d == 1) return CycloElement::from_rational(E, Rational(1, 2));
  std::vector<Rational> c(E, Rational(0));
  for (i64 a = 1; a < d; ++a) {
    i64 k = psi.exponent(a);
    if (k >= 0) c[k] += a;
  }
  return CycloElement::from_coeffs(E, c) * Rational(1, d);
}

Integer abs_discriminant(i64 f, const std::vector<i64>& H) {
  Integer D = 1;
  for (const auto& chi : characters_of_quotient(f, H)) D *= chi.conductor();
  return D;
}

}  // namespace iwasawa
