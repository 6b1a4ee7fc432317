#include "iwasawa/padic.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "iwasawa/characters.hpp"
#include "iwasawa/classgrp.hpp"
#include "iwasawa/stick.hpp"

namespace iwasawa {

namespace {

Integer zpow(i64 p, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

Integer fmod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return r;
}

/// p-integral q modulo m = p^W.
Integer rat_mod(const Rational& q, const Integer& m) {
  return fmod(q.get_num() * inverse_mod(Integer(q.get_den()), m), m);
}

int vp_capped(const Integer& x, i64 p, int cap) {
  if (x == 0) return cap;
  return std::min(cap, valuation(x, p));
}

void reduce_phi(std::vector<Integer>& acc, i64 p, int n, int d) {
  const i64 pn = ipow(p, n);
  for (int m = static_cast<int>(acc.size()) - 1; m >= d; --m) {
    if (acc[m] == 0) continue;
    Integer t = acc[m];
    acc[m] = 0;
    for (i64 j = 0; j <= p - 2; ++j) acc[m - d + j * pn] -= t;
  }
  acc.resize(d);
}

}  // namespace

LocalElement::LocalElement(i64 p, int n, int W) : p_(p), n_(n), W_(W) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("LocalElement: p must be an odd prime");
  if (n < 0 || W < 0) throw std::invalid_argument("LocalElement: bad level or precision");
  mod_ = zpow(p, W);
  c_.assign(euler_phi(ipow(p, n + 1)), Integer(0));
}

LocalElement LocalElement::one(i64 p, int n, int W) {
  LocalElement x(p, n, W);
  x.c_[0] = 1;
  x.reduce();
  return x;
}

LocalElement LocalElement::from_rational(i64 p, int n, int W, const Rational& q) {
  LocalElement x(p, n, W);
  if (q == 0) return x;
  int v = iwasawa::valuation(q, p);
  x.k_ = std::max(0, -v);
  x.c_[0] = rat_mod(q * Rational(zpow(p, x.k_)), x.mod_);
  x.normalize();
  return x;
}

LocalElement LocalElement::zeta_power(i64 p, int n, int W, i64 e) {
  LocalElement x(p, n, W);
  const i64 N = ipow(p, n + 1);
  std::vector<Integer> acc(N, Integer(0));
  acc[mod(e, N)] = 1;
  reduce_phi(acc, p, n, x.degree());
  x.c_ = acc;
  x.reduce();
  return x;
}

LocalElement LocalElement::from_coeffs(i64 p, int n, int W, std::vector<Integer> c, int k) {
  LocalElement x(p, n, W);
  if (static_cast<int>(c.size()) > x.degree()) {
    std::vector<Integer> acc = c;
    acc.resize(std::max<size_t>(acc.size(), ipow(p, n + 1)), Integer(0));
    reduce_phi(acc, p, n, x.degree());
    c = acc;
  }
  c.resize(x.degree(), Integer(0));
  x.c_ = c;
  x.k_ = k;
  x.reduce();
  x.normalize();
  return x;
}

Rational LocalElement::coeff(int i) const {
  Rational q(c_[i], zpow(p_, k_));
  q.canonicalize();
  return q;
}

int LocalElement::valuation() const {
  int v = W_;
  for (const auto& c : c_) v = std::min(v, vp_capped(c, p_, W_));
  return v - k_;
}

bool LocalElement::is_principal_unit() const {
  if (k_ > 0 || W_ < 1) return false;
  Integer s = 0;
  for (const auto& c : c_) s += c;
  return fmod(s, Integer(p_)) == 1;
}

void LocalElement::reduce() {
  for (auto& c : c_) c = fmod(c, mod_);
}

void LocalElement::normalize() {
  while (k_ > 0 && W_ > 0) {
    bool divisible = true;
    for (const auto& c : c_)
      if (c % p_ != 0) {
        divisible = false;
        break;
      }
    if (!divisible) break;
    for (auto& c : c_) c /= p_;
    --W_;
    --k_;
    mod_ /= p_;
  }
}

void LocalElement::check(const LocalElement& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("LocalElement: mixed fields");
}

LocalElement LocalElement::aligned(int k) const {
  LocalElement x = *this;
  const int s = k - k_;
  if (s <= 0) return x;
  Integer f = zpow(p_, s);
  for (auto& c : x.c_) c *= f;
  x.W_ += s;
  x.mod_ *= f;
  x.k_ = k;
  return x;
}

LocalElement LocalElement::operator+(const LocalElement& o) const {
  check(o);
  const int k = std::max(k_, o.k_);
  LocalElement a = aligned(k), b = o.aligned(k);
  if (b.W_ < a.W_) std::swap(a, b);
  for (int i = 0; i < degree(); ++i) a.c_[i] += b.c_[i];
  a.reduce();
  a.normalize();
  return a;
}

LocalElement LocalElement::operator-() const {
  LocalElement x = *this;
  for (auto& c : x.c_) c = -c;
  x.reduce();
  return x;
}

LocalElement LocalElement::operator-(const LocalElement& o) const { return *this + (-o); }

LocalElement LocalElement::operator*(const LocalElement& o) const {
  check(o);
  int v1 = W_, v2 = o.W_;
  for (const auto& c : c_) v1 = std::min(v1, vp_capped(c, p_, W_));
  for (const auto& c : o.c_) v2 = std::min(v2, vp_capped(c, p_, o.W_));
  const int d = degree();
  std::vector<Integer> acc(2 * d - 1, Integer(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (o.c_[j] != 0) acc[i + j] += c_[i] * o.c_[j];
  }
  reduce_phi(acc, p_, n_, d);
  LocalElement r(p_, n_, std::min(W_ + v2, o.W_ + v1));
  r.c_ = acc;
  r.k_ = k_ + o.k_;
  r.reduce();
  r.normalize();
  return r;
}

LocalElement LocalElement::operator*(const Integer& z) const {
  LocalElement r = *this;
  if (z == 0) {
    for (auto& c : r.c_) c = 0;
    return r;
  }
  int v = iwasawa::valuation(z, p_);
  r.W_ += v;
  r.mod_ *= zpow(p_, v);
  for (auto& c : r.c_) c *= z;
  r.reduce();
  r.normalize();
  return r;
}

LocalElement LocalElement::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  LocalElement r = one(p_, n_, W_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

LocalElement LocalElement::div_p_power(int s) const {
  if (s < 0) throw std::invalid_argument("div_p_power: negative shift");
  LocalElement r = *this;
  r.k_ += s;
  r.normalize();
  return r;
}

LocalElement LocalElement::inverse() const {
  if (k_ > 0) throw std::domain_error("inverse: not integral");
  Integer s = 0;
  for (const auto& c : c_) s += c;
  s = fmod(s, Integer(p_));
  if (s == 0) throw std::domain_error("inverse: not a unit");
  LocalElement x = from_rational(p_, n_, W_, Rational(invmod(s.get_si(), p_)));
  const LocalElement e1 = one(p_, n_, W_);
  for (int it = 0; it < 200; ++it) {
    LocalElement e = e1 - *this * x;
    if (e.is_zero()) return x.with_precision(std::min(x.W_, W_));
    x = x + x * e;
  }
  throw std::logic_error("inverse: Newton iteration did not converge");
}

LocalElement LocalElement::galois(i64 b) const {
  const i64 N = ipow(p_, n_ + 1);
  if (gcd(b, N) != 1) throw std::invalid_argument("galois: b must be prime to p");
  std::vector<Integer> acc(N, Integer(0));
  for (int i = 0; i < degree(); ++i) acc[mulmod(i, mod(b, N), N)] += c_[i];
  reduce_phi(acc, p_, n_, degree());
  LocalElement r = *this;
  r.c_ = acc;
  r.reduce();
  return r;
}

Padic LocalElement::trace() const {
  const i64 pn = ipow(p_, n_);
  Integer s = c_[0] * degree();
  for (int i = 1; i < degree(); ++i)
    if (i % pn == 0) s -= c_[i] * pn;
  s = fmod(s, mod_);
  Rational q(s, zpow(p_, k_));
  q.canonicalize();
  return {q, accuracy()};
}

LocalElement LocalElement::with_precision(int Wp) const {
  if (Wp > W_) throw std::invalid_argument("with_precision: cannot add digits");
  LocalElement r = *this;
  r.W_ = Wp;
  r.mod_ = zpow(p_, Wp);
  r.reduce();
  r.normalize();
  return r;
}

LocalElement padic_log(const LocalElement& u) {
  if (!u.is_principal_unit()) throw std::domain_error("padic_log: not a principal unit");
  const i64 p = u.p();
  const int n = u.level();
  const LocalElement e1 = LocalElement::one(p, n, u.precision());
  LocalElement x = u;
  int s = 0;
  while ((x - e1).valuation() < 1) {
    x = x.pow(p);
    if (++s > 64) throw std::logic_error("padic_log: pre-powering did not converge");
  }
  const LocalElement y = x - e1;
  const int W = y.precision();
  LocalElement sum(p, n, W), power = y;
  for (i64 k = 1;; ++k) {
    int lg = 0;
    for (i64 t = p; t <= k; t *= p) ++lg;
    if (k - lg > W + 1) break;
    const int v = valuation(k, p);
    const i64 kp = k / ipow(p, v);
    Integer inv = inverse_mod(Integer(kp), zpow(p, power.precision() + 1));
    LocalElement term = (power * inv).div_p_power(v);
    sum = (k % 2 == 1) ? sum + term : sum - term;
    power = power * y;
  }
  return sum.div_p_power(s);
}

LocalElement padic_exp(const LocalElement& x) {
  if (x.valuation() < 1) throw std::domain_error("padic_exp: need v_p(x) >= 1");
  const i64 p = x.p();
  const int W = x.precision();
  LocalElement sum = LocalElement::one(p, x.level(), W), term = sum;
  for (i64 k = 1; k <= 2 * (x.accuracy() + 2); ++k) {
    const int v = valuation(k, p);
    const i64 kp = k / ipow(p, v);
    term = term * x;
    term = (term * inverse_mod(Integer(kp), zpow(p, term.precision() + 1))).div_p_power(v);
    sum = sum + term;
  }
  return sum;
}

LocalElement b_element(i64 p, int n, int W) {
  LocalElement b(p, n, W);
  for (int i = 0; i <= n; ++i) b = b + LocalElement::zeta_power(p, n, W, ipow(p, n - i));
  return b.div_p_power(n + 1);
}

int local_working_precision(i64 /*p*/, int n, int M) { return M + 4 * (n + 1) + 8; }

LocalElement random_principal_unit(i64 p, int n, int W, std::mt19937_64& rng) {
  const int d = static_cast<int>(euler_phi(ipow(p, n + 1)));
  std::vector<Integer> r(d);
  for (int i = 0; i < d; ++i) {
    Integer v = 0, pw = 1;
    for (int t = 0; t < W; ++t) {
      v += pw * static_cast<unsigned long>(rng() % static_cast<std::uint64_t>(p));
      pw *= p;
    }
    r[i] = v;
  }
  LocalElement rr = LocalElement::from_coeffs(p, n, W, r);
  LocalElement pi = LocalElement::zeta_power(p, n, W, 1) - LocalElement::one(p, n, W);
  return LocalElement::one(p, n, W) + pi * rr;
}

LocalElement minus_unit(const LocalElement& u) { return u * u.galois(-1).inverse(); }

namespace {

i64 group_prime(const RationalGR& x) { return prime_factors(x.group().modulus())[0]; }

}  // namespace

bool equal_within(const PadicGR& a, const PadicGR& b) {
  const int acc = std::min(a.accuracy, b.accuracy);
  const i64 p = group_prime(a.value);
  for (int i = 0; i < a.value.size(); ++i) {
    Rational d = a.value[i] - b.value[i];
    if (d != 0 && valuation(d, p) < acc) return false;
  }
  return true;
}

bool is_integral(const PadicGR& x) {
  if (x.accuracy <= 0) return true;
  const i64 p = group_prime(x.value);
  for (const auto& c : x.value.coeffs())
    if (c != 0 && valuation(c, p) < 0) return false;
  return true;
}

PadicGR canonical(const PadicGR& x, int M) {
  if (x.accuracy < M) throw std::invalid_argument("canonical: accuracy below target");
  const i64 p = group_prime(x.value);
  PadicGR r{rational_zero(x.value.group_ptr()), M};
  for (int i = 0; i < x.value.size(); ++i) {
    const Rational& q = x.value[i];
    if (q == 0) continue;
    int k = std::max(0, -valuation(q, p));
    Integer c = rat_mod(q * Rational(zpow(p, k)), zpow(p, M + k));
    Rational v(c, zpow(p, k));
    v.canonicalize();
    r.value[i] = v;
  }
  return r;
}

namespace {

GroupPtr level_group(const LocalElement& u) { return FiniteAbelianGroup::units(ipow(u.p(), u.level() + 1)); }

}  // namespace

PadicGR w_map(const LocalElement& u, int M) {
  const i64 p = u.p();
  const int n = u.level();
  auto G = level_group(u);
  LocalElement L = padic_log(u);
  LocalElement b = b_element(p, n, L.precision() + n + 3);
  PadicGR w{rational_zero(G), std::numeric_limits<int>::max()};
  for (int g = 0; g < G->order(); ++g) {
    Padic t = (b * L.galois(G->rep(g))).trace();
    w.value[G->inv(g)] = t.value;
    w.accuracy = std::min(w.accuracy, t.accuracy);
  }
  if (w.accuracy < M) throw std::runtime_error("w_map: accuracy underflow");
  return w;
}

PadicGR s_map(const LocalElement& u, int M) {
  const i64 p = u.p();
  const int n = u.level();
  const i64 N = ipow(p, n + 1);
  auto G = level_group(u);
  LocalElement L = padic_log(u);
  const Integer half = (zpow(p, L.precision() + 2) + 1) / 2;
  LocalElement Lm = (L - L.galois(-1)) * half;
  // xi / (1 - xi) = -(1/N) sum_k k xi^{k+1}
  std::vector<Integer> c(N, Integer(0));
  for (i64 k = 0; k < N; ++k) c[(k + 1) % N] -= k;
  LocalElement q = LocalElement::from_coeffs(p, n, Lm.precision() + 2 * (n + 1) + 2, c, n + 1);
  PadicGR s{rational_zero(G), std::numeric_limits<int>::max()};
  for (int g = 0; g < G->order(); ++g) {
    Padic t = (q * Lm.galois(G->rep(G->inv(g)))).trace();
    Rational v = t.value / Rational(N);
    v.canonicalize();
    s.value[g] = v;
    s.accuracy = std::min(s.accuracy, t.accuracy - (n + 1));
  }
  if (s.accuracy < M) throw std::runtime_error("s_map: accuracy underflow");
  return s;
}

SMapCheck check_s_map(const LocalElement& u, int M) {
  const int n = u.level();
  SMapCheck c{s_map(u, M), {rational_zero(FiniteAbelianGroup::units(ipow(u.p(), n + 1))), 0}, false, false};
  PadicGR w = w_map(u, M);
  RationalGR th = theta_sum_formula(ipow(u.p(), n + 1));
  c.theta_w = {th * w.value, w.accuracy - (n + 1)};
  if (c.theta_w.accuracy < M) throw std::runtime_error("check_s_map: accuracy underflow");
  c.integral = is_integral(c.s);
  c.factorization = equal_within(c.s, c.theta_w);
  return c;
}

IdealLattice A_ideal(i64 p, int n, int F) {
  const i64 r = ipow(p, n + 1);
  auto G = FiniteAbelianGroup::units(r);
  RationalGR th = theta_sum_formula(r);
  RationalGR xi = -th.star();
  for (int g = 0; g < G->order(); ++g) xi[g] += Rational(2, ipow(p, n));
  std::vector<RationalGR> gens{xi};
  for (int g = 1; g < G->order(); ++g) {
    RationalGR e = rational_zero(G);
    e[g] = 1;
    e[0] = -1;
    gens.push_back(e);
  }
  return IdealLattice::span_rational(G, p, F, gens, true);
}

bool A_ideal_minus_check(i64 p, int n, int F) {
  const i64 r = ipow(p, n + 1);
  auto G = FiniteAbelianGroup::units(r);
  RationalGR one = rational_zero(G);
  one[0] = 1;
  auto B = IdealLattice::span_rational(G, p, F, {theta_sum_formula(r).star(), one}, true);
  return A_ideal(p, n, F).minus_part(F).equals_at(B.minus_part(F), F);
}

WImageReport w_image_check(i64 p, int n, int M, int samples, std::uint64_t seed, int window) {
  const i64 r = ipow(p, n + 1);
  auto G = FiniteAbelianGroup::units(r);
  const int W = local_working_precision(p, n, M);
  std::mt19937_64 rng(seed);
  auto dual = A_ideal(p, n, M + 2 * (n + 1) + 2).dual_star();
  WImageReport rep{IdealLattice(G, ModLattice(p, M, G->order()), 0), dual, 0, 0, false, false, false};
  for (int i = 0; i < samples; ++i) {
    PadicGR w = w_map(random_principal_unit(p, n, W, rng), M);
    auto S = IdealLattice::span_rational(G, p, M, {w.value}, true);
    int before = rep.image.log_index();
    rep.image = rep.image + S;
    if (rep.image.log_index() != before) rep.last_growth = i + 1;
    ++rep.samples;
  }
  rep.stabilized = rep.samples - rep.last_growth >= window;
  rep.equal = rep.image.equals_at(dual, M);
  rep.equal_minus = rep.image.minus_part(M).equals_at(dual.minus_part(M), M);
  return rep;
}

namespace {

std::vector<i64> gamma_to_T(const std::vector<i64>& g, i64 mod) {
  const size_t L = g.size();
  std::vector<i64> T(L, 0), row{1};  // row = binomials C(m, .)
  for (size_t m = 0; m < L; ++m) {
    if (m > 0) {
      std::vector<i64> next(m + 1, 0);
      next[0] = 1;
      next[m] = 1;
      for (size_t t = 1; t < m; ++t) next[t] = (row[t - 1] + row[t]) % mod;
      row = next;
    }
    if (g[m] == 0) continue;
    for (size_t t = 0; t <= m; ++t) T[t] = (T[t] + mulmod(g[m], row[t], mod)) % mod;
  }
  return T;
}

}  // namespace

int PowerSeriesTruncation::lambda() const {
  for (size_t t = 0; t < T_coeffs.size(); ++t)
    if (T_coeffs[t] % p != 0) return static_cast<int>(t);
  throw std::runtime_error("insufficient level");
}

bool PowerSeriesTruncation::mu_zero() const {
  return std::any_of(T_coeffs.begin(), T_coeffs.end(), [&](i64 c) { return c % p != 0; });
}

i64 PowerSeriesTruncation::evaluate_at_kappa_power(i64 s) const {
  const i64 m = ipow(p, std::min(M, n + 1));
  i64 k = s >= 0 ? powmod(1 + p, s, m) : powmod(invmod(1 + p, m), -s, m);
  i64 acc = 0, x = 1;
  for (i64 c : gamma_coeffs) {
    acc = mod(acc + mulmod(c, x, m), m);
    x = mulmod(x, k, m);
  }
  return acc;
}

PowerSeriesTruncation PowerSeriesTruncation::reduce_level(int m) const {
  if (m > n || m < 0) throw std::invalid_argument("reduce_level: need 0 <= m <= n");
  const i64 L = ipow(p, m), N = ipow(p, M);
  PowerSeriesTruncation r{p, j, m, M, std::vector<i64>(L, 0), {}};
  for (size_t t = 0; t < gamma_coeffs.size(); ++t) r.gamma_coeffs[t % L] = (r.gamma_coeffs[t % L] + gamma_coeffs[t]) % N;
  r.T_coeffs = gamma_to_T(r.gamma_coeffs, N);
  return r;
}

bool PowerSeriesTruncation::operator==(const PowerSeriesTruncation& o) const {
  return p == o.p && j == o.j && n == o.n && M == o.M && gamma_coeffs == o.gamma_coeffs;
}

PowerSeriesTruncation padic_L_truncation(i64 p, int j, int n, int M) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("padic_L_truncation: p must be an odd prime");
  if (j % 2 != 0 || j < 0 || j > p - 3) throw std::invalid_argument("padic_L_truncation: need j even, 0 <= j <= p - 3");
  if (j == 0) throw std::invalid_argument("padic_L_truncation: the j = 0 component is trivial");
  if (n < 0 || M < 1) throw std::invalid_argument("padic_L_truncation: bad level or precision");
  const i64 r = ipow(p, n + 1), pn = ipow(p, n);
  const int Mw = M + n + 1;
  const i64 Nw = ipow(p, Mw), N = ipow(p, M);
  // exponent of <b> = b / omega(b) in base 1 + p, modulo p^n
  std::map<i64, i64> dlog;
  for (i64 m = 0, x = 1; m < pn; ++m, x = mulmod(x, 1 + p, r)) dlog[x] = m;
  std::vector<i64> acc(pn, 0);
  for (i64 a = 1; a < r; ++a) {
    if (a % p == 0) continue;
    const i64 b = invmod(a, r);
    // theta has -(2a - r)/(2r) at sigma_b, and omega^{1-j}(b) = omega^{j-1}(a)
    const i64 wa = powmod(teichmuller(a, p, Mw), j - 1, Nw);
    const i64 m = dlog.at(mulmod(b, invmod(teichmuller(b, p, n + 1), r), r));
    acc[m] = mod(acc[m] - mulmod(mod(2 * a - r, Nw), wa, Nw), Nw);
  }
  const i64 inv2 = invmod(2, N);
  PowerSeriesTruncation f{p, j, n, M, std::vector<i64>(pn, 0), {}};
  for (i64 m = 0; m < pn; ++m) {
    if (acc[m] % r != 0) throw std::logic_error("padic_L_truncation: component not integral");
    f.gamma_coeffs[m] = mulmod((acc[m] / r) % N, inv2, N);
  }
  f.T_coeffs = gamma_to_T(f.gamma_coeffs, N);
  return f;
}

i64 kummer_value(i64 p, int k, int m) {
  auto B = bernoulli_numbers(k);
  Rational v = -(Rational(1) - Rational(zpow(p, k - 1))) * B[k] / Rational(k);
  v.canonicalize();
  return rational_mod(v, p, m);
}

int b1_omega_valuation(i64 p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("b1_omega_valuation: p must be an odd prime");
  const i64 E = p - 1, r0 = primitive_root(p);
  std::vector<i64> exps(p, -1);
  for (i64 t = 0, a = 1; t < E; ++t, a = mulmod(a, r0, p)) exps[a] = mod(-t, E);
  DirichletChar chi(p, E, exps);
  CycloElement pB = bernoulli_b1(chi) * Rational(p);
  const i64 c = pB.conductor();
  const i64 red = pB.reduce_mod(p, powmod(r0, E / c, p));
  const int exact = red != 0 ? -1 : 0;  // 0 only as a lower bound

  // the same number through Teichmuller lifts: sum a omega(a)^{-1} / p
  const i64 N = p * p;
  i64 s = 0;
  for (i64 a = 1; a < p; ++a) s = mod(s + mulmod(a, invmod(teichmuller(a, p, 2), N), N), N);
  const int teich = (s % p != 0) ? -1 : 0;
  if (exact != teich) throw std::logic_error("b1_omega_valuation: evaluations disagree");
  return exact;
}

}  // namespace iwasawa
