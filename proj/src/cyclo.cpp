#include "iwasawa/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace iwasawa {
namespace {

struct CycloContext {
  std::vector<i64> phi_poly;
  int phi = 0;
  // powers[k] = coefficients of x^k mod Phi_f, 0 <= k < f
  std::vector<std::vector<i64>> powers;
};

std::vector<i64> poly_mul(const std::vector<i64>& a, const std::vector<i64>& b) {
  std::vector<i64> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by the monic x^d - 1.
std::vector<i64> poly_div_xd1(std::vector<i64> a, i64 d) {
  size_t n = a.size();
  std::vector<i64> q(n - d, 0);
  for (size_t k = n; k-- > static_cast<size_t>(d);) {
    i64 c = a[k];
    q[k - d] = c;
    a[k] = 0;
    a[k - d] += c;
  }
  for (i64 c : a)
    if (c != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

int moebius(i64 n) {
  int m = 1;
  for (i64 q : prime_factors(n)) {
    if ((n / q) % q == 0) return 0;
    m = -m;
  }
  return m;
}

const CycloContext& context(i64 f) {
  static std::mutex mu;
  static std::map<i64, std::unique_ptr<CycloContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<CycloContext>();
  std::vector<i64> num{1};
  std::vector<i64> dens;
  for (i64 d : divisors(f)) {
    int mu_v = moebius(f / d);
    std::vector<i64> xd(d + 1, 0);
    xd[0] = -1;
    xd[d] = 1;
    if (mu_v == 1) num = poly_mul(num, xd);
    if (mu_v == -1) dens.push_back(d);
  }
  for (i64 d : dens) num = poly_div_xd1(num, d);
  ctx->phi_poly = num;
  ctx->phi = static_cast<int>(num.size()) - 1;
  int phi = ctx->phi;
  ctx->powers.assign(f, std::vector<i64>(phi, 0));
  std::vector<i64> cur(phi, 0);
  cur[0] = 1;
  if (phi == 1 && f == 1) cur[0] = 1;
  for (i64 k = 0; k < f; ++k) {
    ctx->powers[k] = cur;
    // multiply by x and reduce with x^phi = -sum c_i x^i
    i64 top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < phi; ++i) cur[i] -= top * num[i];
  }
  const CycloContext& ref = *ctx;
  cache.emplace(f, std::move(ctx));
  return ref;
}

}  // namespace

const std::vector<i64>& cyclotomic_polynomial(i64 f) { return context(f).phi_poly; }

CycloElement::CycloElement(i64 f) : f_(f), den_(1) {
  if (f < 1) throw std::invalid_argument("CycloElement: conductor must be >= 1");
  num_.assign(context(f).phi, Integer(0));
}

CycloElement CycloElement::from_rational(i64 f, const Rational& q) {
  CycloElement x(f);
  x.num_[0] = q.get_num();
  x.den_ = q.get_den();
  return x;
}

CycloElement CycloElement::root_power(i64 f, i64 k) {
  CycloElement x(f);
  const auto& row = context(f).powers[mod(k, f)];
  for (size_t i = 0; i < row.size(); ++i) x.num_[i] = static_cast<long>(row[i]);
  return x;
}

CycloElement CycloElement::from_dense(i64 f, const std::vector<Integer>& acc, const Integer& den) {
  // acc indexed by exponent mod f
  const auto& ctx = context(f);
  CycloElement x(f);
  for (i64 k = 0; k < static_cast<i64>(acc.size()); ++k) {
    if (acc[k] == 0) continue;
    if (k < ctx.phi) {
      x.num_[k] += acc[k];
      continue;
    }
    const auto& row = ctx.powers[k];
    for (int i = 0; i < ctx.phi; ++i)
      if (row[i] != 0) x.num_[i] += acc[k] * static_cast<long>(row[i]);
  }
  x.den_ = den;
  x.normalize();
  return x;
}

CycloElement CycloElement::from_coeffs(i64 f, const std::vector<Rational>& c) {
  Integer den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> acc(f, Integer(0));
  for (size_t k = 0; k < c.size(); ++k) {
    Rational s = c[k] * Rational(den);
    acc[k % f] += s.get_num();
  }
  return from_dense(f, acc, den);
}

void CycloElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& z : num_) z = -z;
  }
  Integer g = den_;
  for (const auto& z : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& z : num_) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational CycloElement::coeff(int i) const {
  Rational q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

std::vector<Rational> CycloElement::coefficients() const {
  std::vector<Rational> out;
  for (int i = 0; i < degree(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycloElement::is_zero() const {
  for (const auto& z : num_)
    if (z != 0) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CycloElement::to_rational() const {
  if (!is_rational()) throw std::domain_error("CycloElement: not rational");
  return coeff(0);
}

CycloElement CycloElement::galois(i64 b) const {
  if (gcd(b, f_) != 1) throw std::invalid_argument("galois: exponent not a unit");
  std::vector<Integer> acc(f_, Integer(0));
  for (int i = 0; i < degree(); ++i)
    if (num_[i] != 0) acc[mulmod(i, mod(b, f_), f_)] += num_[i];
  return from_dense(f_, acc, den_);
}

CycloElement CycloElement::lift(i64 F) const {
  if (F % f_ != 0) throw std::invalid_argument("lift: conductor does not divide target");
  if (F == f_) return *this;
  std::vector<Integer> acc(F, Integer(0));
  i64 step = F / f_;
  for (int i = 0; i < degree(); ++i)
    if (num_[i] != 0) acc[(i * step) % F] += num_[i];
  return from_dense(F, acc, den_);
}

CycloElement CycloElement::descend(i64 g) const {
  if (f_ % g != 0) throw std::invalid_argument("descend: conductor does not divide");
  if (g == f_) return *this;
  // columns: xi_g^i lifted to Q(mu_f); solve for the coordinates of *this
  const int n = degree();
  const int k = static_cast<int>(context(g).phi);
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(k + 1));
  for (int i = 0; i < k; ++i) {
    CycloElement b = root_power(g, i).lift(f_);
    for (int r = 0; r < n; ++r) A[r][i] = b.coeff(r);
  }
  for (int r = 0; r < n; ++r) A[r][k] = coeff(r);
  int row = 0;
  std::vector<int> pivcol;
  for (int c = 0; c < k && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (A[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[row]);
    Rational inv = 1 / A[row][c];
    for (auto& v : A[row]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || A[r][c] == 0) continue;
      Rational t = A[r][c];
      for (int cc = c; cc <= k; ++cc) A[r][cc] -= t * A[row][cc];
    }
    pivcol.push_back(c);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (A[r][k] != 0) throw std::domain_error("descend: element not in the subfield");
  std::vector<Rational> c(k, Rational(0));
  for (int r = 0; r < row; ++r) c[pivcol[r]] = A[r][k];
  return from_coeffs(g, c);
}

CycloElement CycloElement::mul_root(i64 k) const {
  std::vector<Integer> acc(f_, Integer(0));
  for (int i = 0; i < degree(); ++i)
    if (num_[i] != 0) acc[mod(i + k, f_)] += num_[i];
  return from_dense(f_, acc, den_);
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  if (o.f_ != f_) {
    i64 F = lcm(f_, o.f_);
    return lift(F) + o.lift(F);
  }
  CycloElement r(f_);
  r.den_ = den_ * o.den_;
  for (int i = 0; i < degree(); ++i) r.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
  r.normalize();
  return r;
}

CycloElement CycloElement::operator-() const {
  CycloElement r = *this;
  for (auto& z : r.num_) z = -z;
  return r;
}

CycloElement CycloElement::operator-(const CycloElement& o) const { return *this + (-o); }

CycloElement CycloElement::operator*(const CycloElement& o) const {
  if (o.f_ != f_) {
    i64 F = lcm(f_, o.f_);
    return lift(F) * o.lift(F);
  }
  std::vector<Integer> acc(f_, Integer(0));
  for (int i = 0; i < degree(); ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < degree(); ++j) {
      if (o.num_[j] == 0) continue;
      mpz_addmul(acc[(i + j) % f_].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
  }
  return from_dense(f_, acc, den_ * o.den_);
}

CycloElement CycloElement::operator*(const Rational& q) const {
  CycloElement r = *this;
  for (auto& z : r.num_) z *= q.get_num();
  r.den_ *= q.get_den();
  r.normalize();
  return r;
}

bool CycloElement::operator==(const CycloElement& o) const {
  if (o.f_ != f_) {
    i64 F = lcm(f_, o.f_);
    return lift(F) == o.lift(F);
  }
  return den_ == o.den_ && num_ == o.num_;
}

Complex CycloElement::embed() const {
  const long double two_pi = 2.0L * std::acos(-1.0L);
  Complex s = 0;
  for (int i = 0; i < degree(); ++i) {
    if (num_[i] == 0) continue;
    long double ang = two_pi * static_cast<long double>(i) / static_cast<long double>(f_);
    s += static_cast<long double>(num_[i].get_d()) * Complex(std::cos(ang), std::sin(ang));
  }
  return s / static_cast<long double>(den_.get_d());
}

i64 CycloElement::reduce_mod(i64 q, i64 xi_image) const {
  i64 d = integer_mod(den_, q);
  if (d == 0) throw std::domain_error("reduce_mod: denominator vanishes");
  i64 s = 0, pw = 1;
  for (int i = 0; i < degree(); ++i) {
    if (num_[i] != 0) s = mod(s + mulmod(integer_mod(num_[i], q), pw, q), q);
    pw = mulmod(pw, xi_image, q);
  }
  return mulmod(s, invmod(d, q), q);
}

CycloProduct CycloProduct::galois(i64 b) const {
  if (gcd(b, f_) != 1) throw std::invalid_argument("galois: exponent not a unit");
  CycloProduct r(f_);
  for (auto [a, e] : factors_) r.add_factor(mulmod(a, mod(b, f_), f_), e);
  return r;
}

CycloElement CycloProduct::expand() const {
  CycloElement r = CycloElement::one(f_);
  for (auto [a, e] : factors_) {
    CycloElement t = CycloElement::one(f_) - CycloElement::root_power(f_, a);
    if (e < 0) throw std::domain_error("expand: negative exponents unsupported");
    for (int i = 0; i < e; ++i) r *= t;
  }
  return r;
}

i64 CycloProduct::reduce_mod(i64 q, i64 xi_image) const {
  i64 r = 1;
  for (auto [a, e] : factors_) {
    i64 t = mod(1 - powmod(xi_image, a, q), q);
    if (t == 0) throw std::domain_error("reduce_mod: factor vanishes modulo q");
    r = mulmod(r, powmod(t, e, q), q);
  }
  return r;
}

}  // namespace iwasawa
