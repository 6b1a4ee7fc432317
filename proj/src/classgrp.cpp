#include "iwasawa/classgrp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace iwasawa {
namespace {

i64 isqrt(i64 n) {
  i64 s = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

// (u, v, d) with u a + v b = d = gcd(a, b), d > 0
void ext_gcd(i64 a, i64 b, i64& u, i64& v, i64& d) {
  i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  u = s0;
  v = t0;
  d = r0;
}

}  // namespace

bool is_fundamental_discriminant(i64 D) {
  if (D == 0 || D == 1) return false;
  i64 m = mod(D, 4);
  auto squarefree = [](i64 x) {
    if (x < 0) x = -x;
    for (i64 l : prime_factors(x))
      if (x % (l * l) == 0) return false;
    return true;
  };
  if (m == 1) return squarefree(D);
  if (m != 0) return false;
  i64 e = D / 4;
  i64 em = mod(e, 4);
  return (em == 2 || em == 3) && squarefree(e);
}

bool is_reduced_indefinite(const QuadForm& f) {
  i64 D = f.disc();
  i64 s = isqrt(D);
  i64 A = f.a < 0 ? -f.a : f.a;
  return f.b > 0 && f.b <= s && 2 * A + f.b > s && 2 * A - f.b <= s;
}

QuadForm rho(const QuadForm& f) {
  i64 D = f.disc();
  i64 s = isqrt(D);
  i64 C = f.c < 0 ? -f.c : f.c;
  if (C == 0) throw std::domain_error("rho: degenerate form");
  i64 m = 2 * C;
  i64 lo = C > s ? -C + 1 : s - 2 * C + 1;  // r in [lo, lo + 2C)
  i64 r = lo + mod(-f.b - lo, m);
  QuadForm g{f.c, r, (r * r - D) / (4 * f.c)};
  if (g.disc() != D) throw std::logic_error("rho: discriminant changed");
  return g;
}

QuadForm reduce_indefinite(const QuadForm& f) {
  QuadForm g = f;
  for (int it = 0; !is_reduced_indefinite(g); ++it) {
    if (it > 10000) throw std::logic_error("reduce_indefinite: no convergence");
    g = rho(g);
  }
  return g;
}

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
  QuadForm A = f1, B = f2;
  if (A.a <= 0 || B.a <= 0) throw std::invalid_argument("compose: leading coefficients must be positive");
  if (A.disc() != B.disc()) throw std::invalid_argument("compose: discriminants differ");
  if (A.a > B.a) std::swap(A, B);
  i64 s = (A.b + B.b) / 2, n = B.b - s;
  i64 y1, d;
  if (B.a % A.a == 0) {
    y1 = 0;
    d = A.a;
  } else {
    i64 u, v;
    ext_gcd(B.a, A.a, u, v, d);
    y1 = u;
  }
  i64 x2, y2, d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    ext_gcd(s, d, x2, y2, d1);
    y2 = -y2;
  }
  i64 v1 = A.a / d1, v2 = B.a / d1;
  i64 r = mod(static_cast<i64>((static_cast<i128>(y1) * y2 * n - static_cast<i128>(x2) * B.c) % v1), v1);
  i64 b3 = B.b + 2 * v2 * r;
  i64 a3 = v1 * v2;
  i64 D = A.disc();
  if ((b3 * b3 - D) % (4 * a3) != 0) throw std::logic_error("compose: inexact");
  return {a3, b3, (b3 * b3 - D) / (4 * a3)};
}

FormClassGroup::FormClassGroup(i64 D) : D_(D) {
  if (D <= 0 || !is_fundamental_discriminant(D))
    throw std::invalid_argument("FormClassGroup: need a positive fundamental discriminant");
  const i64 s = isqrt(D);
  std::set<QuadForm> reduced;
  for (i64 b = 1; b <= s; ++b) {
    if (mod(b - D, 2) != 0) continue;
    for (i64 A = std::max<i64>(1, (s - b) / 2); 2 * A - b <= s; ++A) {
      if (2 * A + b <= s) continue;
      i64 num = b * b - D;
      if (num % (4 * A) != 0) continue;
      i64 c = num / (4 * A);
      if (gcd(gcd(A, b), c < 0 ? -c : c) != 1) continue;
      reduced.insert({A, b, c});
      reduced.insert({-A, b, -c});
    }
  }
  i64 delta = D % 2;
  QuadForm principal = reduce_indefinite({1, delta, (delta * delta - D) / 4});
  // principal cycle first, the rest in order of their least form
  std::vector<QuadForm> starts{principal};
  for (const auto& f : reduced) starts.push_back(f);
  for (const auto& f0 : starts) {
    if (index_.count(f0)) continue;
    std::vector<QuadForm> cyc;
    QuadForm f = f0;
    do {
      if (!reduced.count(f)) throw std::logic_error("FormClassGroup: rho left the reduced set");
      cyc.push_back(f);
      index_[f] = static_cast<int>(cycles_.size());
      f = rho(f);
    } while (!(f == f0));
    cycles_.push_back(std::move(cyc));
  }
  const int h = narrow_order();
  table_.assign(h, std::vector<int>(h, 0));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) table_[i][j] = class_of(compose(representative(i), representative(j)));
  inv_.assign(h, -1);
  conj_.assign(h, -1);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j)
      if (table_[i][j] == 0) inv_[i] = j;
    QuadForm r = representative(i);
    conj_[i] = class_of({r.a, -r.b, r.c});
  }
  minus_one_ = class_of({-1, delta, (D - delta * delta) / 4});
}

QuadForm FormClassGroup::representative(int i) const {
  for (const auto& f : cycles_[i])
    if (f.a > 0) return f;
  throw std::logic_error("representative: cycle without positive leading coefficient");
}

int FormClassGroup::class_of(const QuadForm& f) const {
  if (f.disc() != D_) throw std::invalid_argument("class_of: wrong discriminant");
  auto it = index_.find(reduce_indefinite(f));
  if (it == index_.end()) throw std::logic_error("class_of: reduced form not enumerated");
  return it->second;
}

int FormClassGroup::pow(int i, i64 e) const {
  e = mod(e, narrow_order());
  int r = 0, b = i;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int FormClassGroup::element_order(int i) const {
  int k = 1;
  for (int x = i; x != 0; x = mul(x, i)) ++k;
  return k;
}

std::vector<i64> FormClassGroup::invariant_factors() const {
  // per prime l, the partition of the l-part from counts of l^k-torsion
  const int h = narrow_order();
  std::map<i64, std::vector<i64>> pieces;
  for (i64 l : prime_factors(h)) {
    std::vector<i64> tors{1};  // |G[l^k]|
    for (int k = 1;; ++k) {
      i64 lk = ipow(l, k);
      i64 cnt = 0;
      for (int i = 0; i < h; ++i)
        if (pow(i, lk) == 0) ++cnt;
      tors.push_back(cnt);
      if (cnt == tors[k - 1]) break;
    }
    // number of cyclic factors of order >= l^k is log_l(tors[k]/tors[k-1])
    std::vector<int> ge;
    for (size_t k = 1; k < tors.size(); ++k) ge.push_back(valuation(tors[k] / tors[k - 1], l));
    std::vector<i64> orders;
    for (size_t k = 0; k < ge.size(); ++k) {
      int exact = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
      for (int t = 0; t < exact; ++t) orders.push_back(ipow(l, static_cast<int>(k + 1)));
    }
    std::sort(orders.rbegin(), orders.rend());
    pieces[l] = orders;
  }
  size_t r = 0;
  for (auto& [l, v] : pieces) r = std::max(r, v.size());
  std::vector<i64> out(r, 1);
  for (auto& [l, v] : pieces)
    for (size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> FormClassGroup::p_part(i64 p) const {
  std::vector<int> out;
  for (int i = 0; i < narrow_order(); ++i) {
    i64 o = element_order(i);
    while (o % p == 0) o /= p;
    if (o == 1) out.push_back(i);
  }
  return out;
}

std::vector<int> FormClassGroup::p_part_generators(i64 p) const {
  auto P = p_part(p);
  std::vector<int> gens;
  std::set<int> span{0};
  while (span.size() < P.size()) {
    int best = -1;
    for (int x : P)
      if (!span.count(x) && (best < 0 || element_order(x) > element_order(best))) best = x;
    gens.push_back(best);
    std::set<int> next = span;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a : std::vector<int>(next.begin(), next.end())) {
        int b = mul(a, best);
        if (next.insert(b).second) grew = true;
      }
    }
    span = next;
  }
  return gens;
}

i64 analytic_class_number(i64 D) {
  if (D <= 0 || !is_fundamental_discriminant(D)) throw std::invalid_argument("analytic_class_number: bad D");
  const long double pi = std::numbers::pi_v<long double>;
  long double S = 0;
  for (i64 a = 1; 2 * a < D; ++a) {
    int c = kronecker(D, a);
    if (c) S -= c * std::log(std::sin(pi * a / D));
  }
  // continued fraction of (delta + sqrt D)/2; the product of the complete
  // quotients over one period is the fundamental unit
  const long double r = std::sqrt(static_cast<long double>(D));
  const i64 s = isqrt(D);
  i64 P = D % 2, Q = 2;
  std::map<std::pair<i64, i64>, int> seen;
  std::vector<long double> logs;
  for (int i = 0;; ++i) {
    auto key = std::make_pair(P, Q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      long double L = 0;
      for (size_t j = it->second; j < logs.size(); ++j) L += logs[j];
      long double h = S / L;
      i64 hr = std::llround(h);
      if (std::fabs(h - hr) > 1e-6L) throw std::runtime_error("analytic_class_number: no integer");
      return hr;
    }
    seen[key] = i;
    logs.push_back(std::log((P + r) / Q));
    i64 a = (P + s) / Q;
    if (Q < 0) a = static_cast<i64>(std::floor((P + r) / Q));
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

std::vector<i64> search_real_quadratic(i64 p, i64 D_max, int count) {
  std::vector<i64> out;
  for (i64 D = 5; D <= D_max && static_cast<int>(out.size()) < count; ++D) {
    if (!is_fundamental_discriminant(D)) continue;
    if (FormClassGroup(D).wide_order() % p == 0) out.push_back(D);
  }
  return out;
}

std::vector<Rational> bernoulli_numbers(int k) {
  std::vector<Rational> B(k + 1);
  std::vector<Integer> binom{1};  // row m+1 of Pascal's triangle, rebuilt per m
  B[0] = 1;
  for (int m = 1; m <= k; ++m) {
    // C(m+1, j)
    std::vector<Integer> row(m + 2);
    row[0] = 1;
    for (int j = 1; j <= m + 1; ++j) row[j] = row[j - 1] * (m + 2 - j) / j;
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += Rational(row[j]) * B[j];
    B[m] = -s / (m + 1);
    B[m].canonicalize();
  }
  return B;
}

bool von_staudt_clausen(const Rational& Bk, int k) {
  Rational s = Bk;
  for (i64 d : divisors(k))
    if (is_prime(d + 1)) s += Rational(1, d + 1);
  s.canonicalize();
  return s.get_den() == 1;
}

Integer minus_class_number(i64 m) {
  auto ps = prime_factors(m);
  if (m < 3 || ps.size() != 1 || ps[0] == 2) throw std::invalid_argument("minus_class_number: m must be an odd prime power");
  auto chars = dirichlet_characters(m);
  const i64 E = chars[0].value_order();
  CycloElement prod = CycloElement::one(E);
  for (const auto& chi : chars)
    if (chi.is_odd()) prod *= bernoulli_b1(chi) * Rational(-1, 2);
  Rational h = prod.to_rational() * Rational(2 * m);
  h.canonicalize();
  if (h.get_den() != 1 || h <= 0) throw std::logic_error("minus_class_number: not a positive integer");
  return h.get_num();
}

long double minus_class_number_float(i64 m) {
  Complex prod = 1;
  for (const auto& chi : dirichlet_characters(m)) {
    if (!chi.is_odd()) continue;
    auto psi = chi.primitive();
    Complex b = 0;
    for (i64 a = 1; a < psi.modulus(); ++a) b += static_cast<long double>(a) * psi.value(a);
    b /= static_cast<long double>(psi.modulus());
    prod *= -0.5L * b;
  }
  return prod.real() * 2 * m;
}

std::vector<std::pair<i64, int>> herbrand_pairs(i64 p, int k_max) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("herbrand_pairs: p must be an odd prime");
  int top = static_cast<int>(std::min<i64>(k_max, p - 3));
  std::vector<std::pair<i64, int>> out;
  if (top < 2) return out;
  auto B = bernoulli_numbers(top);
  for (int k = 2; k <= top; k += 2)
    if (B[k].get_num() % p == 0) out.emplace_back(p, k);
  return out;
}

MinkowskiCertificate minkowski_certify_h1(const AbelianField& F) {
  const int d = F.degree();
  if (d > 3) throw std::invalid_argument("minkowski_certify_h1: degree > 3");
  MinkowskiCertificate c{true, 1, 1, ""};
  if (F.is_rational()) {
    c.reason = "Q";
    return c;
  }
  c.abs_disc = abs_discriminant(F.conductor(), F.subgroup());
  int r2 = F.is_real() ? 0 : d / 2;
  long double fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  c.bound = std::pow(4 / std::numbers::pi_v<long double>, r2) * fact / std::pow(static_cast<long double>(d), d) *
            std::sqrt(c.abs_disc.get_d());
  const i64 f = F.conductor();
  for (i64 l = 2; l <= c.bound; ++l) {
    if (!is_prime(l)) continue;
    i64 fp = f;
    while (fp % l == 0) fp /= l;
    i64 deg = 1;
    if (fp > 1) {
      std::vector<i64> Hp;
      for (i64 h : F.subgroup()) Hp.push_back(h % fp);
      auto Gp = FiniteAbelianGroup::quotient(fp, Hp);
      deg = Gp->element_order(Gp->index_of(l));
    }
    long double norm = std::pow(static_cast<long double>(l), static_cast<long double>(deg));
    if (norm <= c.bound) {
      c.certified = false;
      c.reason = "prime ideal of norm " + std::to_string(static_cast<i64>(norm)) + " below the bound";
      return c;
    }
  }
  c.reason = "no prime ideal of norm below the Minkowski bound";
  return c;
}

MinkowskiCertificate certify_plus_part_trivial(i64 p, int n) {
  AbelianField F0 = AbelianField::normalized(p, {1, p - 1});
  MinkowskiCertificate c{false, 0, 0, ""};
  try {
    c = minkowski_certify_h1(F0);
  } catch (const std::invalid_argument&) {
    c.reason = "level 0 field has degree > 3";
    return c;
  }
  if (c.certified && n > 0)
    c.reason += "; carried to level " + std::to_string(n) +
                " since the tower over Q(mu_p)^+ is a p-extension totally ramified at one prime";
  return c;
}

}  // namespace iwasawa
