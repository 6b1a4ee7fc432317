#include "iwasawa/arith.hpp"

#include <limits>

namespace iwasawa {

i64 powmod(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  i64 r = 1;
  i64 b = mod(base, m);
  if (exp < 0) {
    b = invmod(b, m);
    exp = -exp;
  }
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    exp >>= 1;
  }
  return r;
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm(i64 a, i64 b) { return a / gcd(a, b) * b; }

i64 invmod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("invmod: not invertible");
  return mod(old_s, m);
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (b != 0 && (r > std::numeric_limits<i64>::max() / (b < 0 ? -b : b)))
      throw std::overflow_error("ipow overflow");
    r *= b;
  }
  return r;
}

int valuation(i64 x, i64 p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int valuation(const Integer& x, i64 p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  Integer y = x;
  Integer pp = static_cast<long>(p);
  int v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), pp.get_mpz_t())) {
    y /= pp;
    ++v;
  }
  return v;
}

int valuation(const Rational& q, i64 p) {
  if (q == 0) throw std::domain_error("valuation of zero");
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  if (n < 0) n = -n;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

i64 euler_phi(i64 n) {
  i64 r = n;
  for (i64 q : prime_factors(n)) r = r / q * (q - 1);
  return r;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

i64 multiplicative_order(i64 a, i64 m) {
  if (gcd(a, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  if (m == 1) return 1;
  i64 phi = euler_phi(m);
  i64 ord = phi;
  for (i64 q : prime_factors(phi)) {
    while (ord % q == 0 && powmod(a, ord / q, m) == 1) ord /= q;
  }
  return ord;
}

i64 primitive_root(i64 p) {
  if (p == 2) return 1;
  auto fs = prime_factors(p - 1);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : fs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::domain_error("primitive_root: p not prime");
}

i64 teichmuller(i64 a, i64 p, int M) {
  i64 pm = ipow(p, M);
  // a^{p^{M-1}} is the Teichmuller representative modulo p^M.
  i64 t = mod(a, pm);
  for (int i = 1; i < M; ++i) t = powmod(t, p, pm);
  return t;
}

i64 integer_mod(const Integer& z, i64 m) {
  Integer r = z % Integer(static_cast<long>(m));
  if (r < 0) r += static_cast<long>(m);
  return r.get_si();
}

i64 rational_mod(const Rational& q, i64 p, int M) {
  i64 pm = ipow(p, M);
  i64 den = integer_mod(q.get_den(), pm);
  if (den % p == 0) throw std::domain_error("rational_mod: not p-integral");
  return mulmod(integer_mod(q.get_num(), pm), invmod(den, pm), pm);
}

int kronecker(i64 d, i64 n) {
  if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    i64 r = mod(d, 8);
    if (r == 0 || r == 2 || r == 4 || r == 6) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (d/n) for odd n.
  i64 a = mod(d, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace iwasawa
