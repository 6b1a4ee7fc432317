#include "iwasawa/lattice.hpp"

#include <algorithm>
#include <functional>

namespace iwasawa {

ModLattice::ModLattice(i64 p, int M, int d)
    : p_(p), M_(M), d_(d), N_(ipow(p, M)), B_(IntMatrix::Zero(d, d)), e_(d, M) {
  if (M < 0) throw std::invalid_argument("ModLattice: negative precision");
}

ModLattice ModLattice::span(i64 p, int M, int d, const std::vector<std::vector<i64>>& rows) {
  ModLattice L(p, M, d);
  L.absorb(rows);
  return L;
}

ModLattice ModLattice::full(i64 p, int M, int d) {
  std::vector<std::vector<i64>> rows(d, std::vector<i64>(d, 0));
  for (int i = 0; i < d; ++i) rows[i][i] = 1;
  return span(p, M, d, rows);
}

void ModLattice::absorb(std::vector<std::vector<i64>> pool) {
  const i64 N = N_;
  // existing basis rows join the pool
  for (int j = 0; j < d_; ++j) {
    if (e_[j] >= M_) continue;
    std::vector<i64> r(d_);
    for (int k = 0; k < d_; ++k) r[k] = B_(j, k);
    pool.push_back(std::move(r));
  }
  for (auto& r : pool) {
    if (static_cast<int>(r.size()) != d_) throw std::invalid_argument("ModLattice: row length mismatch");
    for (auto& x : r) x = mod(x, N);
  }
  B_.setZero();
  std::fill(e_.begin(), e_.end(), M_);
  if (M_ == 0) return;
  std::vector<i64> ppow(M_ + 1, 1);
  for (int i = 1; i <= M_; ++i) ppow[i] = ppow[i - 1] * p_;

  for (int j = 0; j < d_; ++j) {
    int best = -1, bv = M_;
    for (int r = 0; r < static_cast<int>(pool.size()); ++r) {
      if (pool[r][j] == 0) continue;
      int v = valuation(pool[r][j], p_);
      if (v < bv) {
        bv = v;
        best = r;
        if (v == 0) break;
      }
    }
    if (best < 0) continue;
    std::vector<i64> piv = std::move(pool[best]);
    pool.erase(pool.begin() + best);
    i64 unit = piv[j] / ppow[bv];
    i64 uinv = invmod(unit, N);
    for (auto& x : piv) x = mulmod(x, uinv, N);
    for (auto& r : pool) {
      if (r[j] == 0) continue;
      i64 q = r[j] / ppow[bv];
      for (int k = j; k < d_; ++k) r[k] = mod(r[k] - mulmod(q, piv[k], N), N);
    }
    // saturation: p^{M-v} * piv vanishes in column j but may survive elsewhere
    std::vector<i64> s(d_);
    bool nz = false;
    for (int k = 0; k < d_; ++k) {
      s[k] = mulmod(piv[k], ppow[M_ - bv], N);
      nz = nz || s[k] != 0;
    }
    if (nz) pool.push_back(std::move(s));
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const std::vector<i64>& r) {
                                return std::all_of(r.begin(), r.end(), [](i64 x) { return x == 0; });
                              }),
               pool.end());
    e_[j] = bv;
    for (int k = 0; k < d_; ++k) B_(j, k) = piv[k];
  }
  // reduce entries above pivots
  for (int j = 0; j < d_; ++j) {
    if (e_[j] >= M_) continue;
    for (int i = 0; i < j; ++i) {
      if (e_[i] >= M_) continue;
      i64 q = B_(i, j) / ppow[e_[j]];
      if (q == 0) continue;
      for (int k = j; k < d_; ++k) B_(i, k) = mod(B_(i, k) - mulmod(q, B_(j, k), N), N);
    }
  }
}

std::vector<std::vector<i64>> ModLattice::generators() const {
  std::vector<std::vector<i64>> out;
  for (int j = 0; j < d_; ++j) {
    if (e_[j] >= M_) continue;
    std::vector<i64> r(d_);
    for (int k = 0; k < d_; ++k) r[k] = B_(j, k);
    out.push_back(std::move(r));
  }
  return out;
}

bool ModLattice::contains(const std::vector<i64>& v0) const {
  if (static_cast<int>(v0.size()) != d_) throw std::invalid_argument("contains: length mismatch");
  std::vector<i64> v(v0);
  for (auto& x : v) x = mod(x, N_);
  for (int j = 0; j < d_; ++j) {
    if (v[j] == 0) continue;
    if (e_[j] >= M_) return false;
    i64 pe = ipow(p_, e_[j]);
    if (v[j] % pe != 0) return false;
    i64 q = v[j] / pe;
    for (int k = j; k < d_; ++k) v[k] = mod(v[k] - mulmod(q, B_(j, k), N_), N_);
  }
  return true;
}

bool ModLattice::contains(const ModLattice& o) const {
  if (o.M_ != M_ || o.d_ != d_ || o.p_ != p_) throw std::invalid_argument("contains: mixed ambients");
  for (const auto& r : o.generators())
    if (!contains(r)) return false;
  return true;
}

int ModLattice::log_index() const {
  int s = 0;
  for (int x : e_) s += x;
  return s;
}

bool ModLattice::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [&](int x) { return x >= M_; });
}

ModLattice ModLattice::truncate(int Mp) const {
  if (Mp > M_) throw std::invalid_argument("truncate: precision increase");
  return span(p_, Mp, d_, generators());
}

ModLattice ModLattice::scaled_up(int k) const {
  ModLattice L(p_, M_ + k, d_);
  i64 pk = ipow(p_, k);
  auto rows = generators();
  for (auto& r : rows)
    for (auto& x : r) x *= pk;
  for (int j = 0; j < d_; ++j) {
    if (e_[j] < M_) continue;
    std::vector<i64> r(d_, 0);
    r[j] = N_ * pk;
    rows.push_back(r);
  }
  L.absorb(rows);
  return L;
}

ModLattice ModLattice::annihilator() const {
  // X = p^M B^{-1} for the full upper-triangular basis B (absent rows are p^M e_j);
  // the columns of X span the annihilator.
  Integer N(static_cast<long>(N_));
  std::vector<std::vector<Integer>> B(d_, std::vector<Integer>(d_, Integer(0)));
  std::vector<Integer> diag(d_);
  for (int j = 0; j < d_; ++j) {
    if (e_[j] >= M_) {
      B[j][j] = N;
    } else {
      for (int k = 0; k < d_; ++k) B[j][k] = static_cast<long>(B_(j, k));
    }
    diag[j] = B[j][j];
  }
  std::vector<std::vector<i64>> rows;
  for (int k = 0; k < d_; ++k) {
    std::vector<Integer> x(d_, Integer(0));
    x[k] = N / diag[k];
    for (int j = k - 1; j >= 0; --j) {
      Integer s = 0;
      for (int l = j + 1; l <= k; ++l) s += B[j][l] * x[l];
      if (s % diag[j] != 0) throw std::logic_error("annihilator: inexact division");
      x[j] = -s / diag[j];
    }
    std::vector<i64> r(d_);
    for (int j = 0; j < d_; ++j) r[j] = integer_mod(x[j], N_);
    rows.push_back(std::move(r));
  }
  return span(p_, M_, d_, rows);
}

ModLattice ModLattice::operator+(const ModLattice& o) const {
  if (o.M_ != M_ || o.d_ != d_ || o.p_ != p_) throw std::invalid_argument("sum: mixed ambients");
  ModLattice L = *this;
  L.absorb(o.generators());
  return L;
}

bool ModLattice::operator==(const ModLattice& o) const {
  return p_ == o.p_ && M_ == o.M_ && d_ == o.d_ && e_ == o.e_ && B_ == o.B_;
}

// ---------------------------------------------------------------------------

IdealLattice::IdealLattice(GroupPtr G, ModLattice U, int denom_exp)
    : G_(std::move(G)), U_(std::move(U)), a_(denom_exp) {
  if (U_.dim() != G_->order()) throw std::invalid_argument("IdealLattice: dimension mismatch");
}

IdealLattice IdealLattice::span_snf(GroupPtr G, i64 p, int M, const std::vector<ZmodGR>& gens,
                                    bool close_under_G) {
  i64 N = ipow(p, M);
  std::vector<std::vector<i64>> rows;
  for (const auto& x : gens) {
    if (!x.group().same_as(*G)) throw std::invalid_argument("span_snf: mixed ambients");
    if (x.zero().modulus() % N != 0 && x.zero().modulus() != N)
      throw std::invalid_argument("span_snf: coefficient modulus mismatch");
    if (close_under_G) {
      for (int g = 0; g < G->order(); ++g) rows.push_back(to_vector(x.translate(g)));
    } else {
      rows.push_back(to_vector(x));
    }
  }
  int d = G->order();
  return IdealLattice(G, ModLattice::span(p, M, d, rows), 0);
}

IdealLattice IdealLattice::span_rational(GroupPtr G, i64 p, int F, const std::vector<RationalGR>& gens,
                                         bool close_under_G) {
  int a = 0;
  for (const auto& x : gens) {
    if (!x.group().same_as(*G)) throw std::invalid_argument("span_rational: mixed ambients");
    for (int i = 0; i < x.size(); ++i)
      if (x[i] != 0) a = std::max(a, -valuation(x[i], p));
  }
  int M = F + a;
  if (M < 0) throw std::invalid_argument("span_rational: floor below denominators");
  Rational scale = 1;
  for (int i = 0; i < a; ++i) scale *= p;
  std::vector<std::vector<i64>> rows;
  auto push = [&](const RationalGR& x) {
    std::vector<i64> r(x.size());
    for (int i = 0; i < x.size(); ++i) r[i] = rational_mod(x[i] * scale, p, M);
    rows.push_back(std::move(r));
  };
  for (const auto& x : gens) {
    if (close_under_G) {
      for (int g = 0; g < G->order(); ++g) push(x.translate(g));
    } else {
      push(x);
    }
  }
  return IdealLattice(G, ModLattice::span(p, M, G->order(), rows), a);
}

IdealLattice IdealLattice::full(GroupPtr G, i64 p, int M) {
  int d = G->order();
  return IdealLattice(G, ModLattice::full(p, M, d), 0);
}

std::vector<RationalGR> IdealLattice::basis() const {
  std::vector<RationalGR> out;
  Rational s = 1;
  for (int i = 0; i < std::abs(a_); ++i) s *= p();
  if (a_ > 0) s = 1 / s;
  for (const auto& r : U_.generators()) {
    RationalGR x = rational_zero(G_);
    for (int i = 0; i < dim(); ++i) x[i] = Rational(r[i]) * s;
    out.push_back(x);
  }
  return out;
}

std::vector<ZmodGR> IdealLattice::basis_mod() const {
  if (a_ != 0) throw std::domain_error("basis_mod: fractional lattice");
  std::vector<ZmodGR> out;
  for (const auto& r : U_.generators()) out.push_back(from_vector(G_, r, U_.modulus()));
  return out;
}

bool IdealLattice::contains(const ZmodGR& x) const {
  if (a_ != 0) throw std::domain_error("contains: fractional lattice");
  if (x.zero().modulus() != U_.modulus()) throw std::invalid_argument("contains: modulus mismatch");
  return U_.contains(to_vector(x));
}

bool IdealLattice::is_ideal() const {
  for (const auto& r : U_.generators()) {
    ZmodGR x = from_vector(G_, r, U_.modulus());
    for (int g = 0; g < G_->order(); ++g)
      if (!U_.contains(to_vector(x.translate(g)))) return false;
  }
  return true;
}

IdealLattice IdealLattice::truncate(int F) const {
  if (F > floor()) throw std::invalid_argument("truncate: floor exceeds known precision");
  if (F + a_ < 0) {
    // everything down to p^F: the lattice p^F Z_p[G]
    return IdealLattice(G_, ModLattice::full(p(), 0, dim()), -F);
  }
  return IdealLattice(G_, U_.truncate(F + a_), a_);
}

bool IdealLattice::equals_at(const IdealLattice& o, int F) const {
  if (!G_->same_as(*o.G_) || p() != o.p()) throw std::invalid_argument("equals_at: mixed ambients");
  int A = std::max(a_, o.a_);
  int M = F + A;
  if (M <= 0) return true;
  auto build = [&](const IdealLattice& L) {
    i64 N = ipow(p(), M);
    std::vector<std::vector<i64>> rows;
    int k = A - L.a_;
    for (const auto& r0 : L.U_.generators()) {
      std::vector<i64> r(r0.size());
      for (size_t i = 0; i < r.size(); ++i) r[i] = k >= M ? 0 : mulmod(r0[i], ipow(p(), k), N);
      rows.push_back(r);
    }
    // the implicit p^{M_L} Z_p[G] part, scaled
    int ek = L.U_.precision() + k;
    if (ek < M)
      for (int j = 0; j < dim(); ++j) {
        std::vector<i64> r(dim(), 0);
        r[j] = ipow(p(), ek);
        rows.push_back(r);
      }
    return ModLattice::span(p(), M, dim(), rows);
  };
  return build(*this) == build(o);
}

bool IdealLattice::operator==(const IdealLattice& o) const {
  return equals_at(o, std::min(floor(), o.floor()));
}

bool IdealLattice::rank_deficient() const {
  for (int e : U_.exponents())
    if (e >= U_.precision()) return true;
  return false;
}

IdealLattice IdealLattice::dual_star() const {
  return IdealLattice(G_, U_.annihilator(), U_.precision() - a_);
}

IdealLattice IdealLattice::times(const RationalGR& x, int F) const {
  std::vector<RationalGR> gens;
  for (const auto& b : basis()) gens.push_back(b * x);
  Rational pf = 1;
  int fl = floor();
  for (int i = 0; i < std::abs(fl); ++i) pf *= p();
  if (fl < 0) pf = 1 / pf;
  for (int g = 0; g < dim(); ++g) {
    RationalGR e = rational_zero(G_);
    e[g] = pf;
    gens.push_back(e * x);
  }
  return span_rational(G_, p(), F, gens, false);
}

IdealLattice IdealLattice::minus_part(int F) const {
  RationalGR e = rational_zero(G_);
  e[0] = Rational(1, 2);
  e[G_->conj()] -= Rational(1, 2);
  return times(e, F);
}

IdealLattice IdealLattice::plus_part(int F) const {
  RationalGR e = rational_zero(G_);
  e[0] = Rational(1, 2);
  e[G_->conj()] += Rational(1, 2);
  return times(e, F);
}

IdealLattice operator+(const IdealLattice& a, const IdealLattice& b) {
  int F = std::min(a.floor(), b.floor());
  std::vector<RationalGR> gens = a.basis();
  for (const auto& x : b.basis()) gens.push_back(x);
  return IdealLattice::span_rational(a.group(), a.p(), F, gens, false);
}

ModLattice kernel_mod(const std::vector<std::vector<i64>>& T, i64 p, int k, int d) {
  return ModLattice::span(p, k, d, T).annihilator();
}

namespace {

ZmodGR minor_det(const std::vector<std::vector<ZmodGR>>& A, std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() == 1) return A[rows[0]][cols[0]];
  ZmodGR acc = zmod_zero(A[0][0].group_ptr(), A[0][0].zero().modulus());
  int r0 = rows[0];
  std::vector<int> rest(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < cols.size(); ++c) {
    std::vector<int> sub = cols;
    sub.erase(sub.begin() + c);
    ZmodGR t = A[r0][cols[c]] * minor_det(A, rest, sub);
    if (c % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

}  // namespace

IdealLattice fitting_ideal(const std::vector<std::vector<ZmodGR>>& P, i64 p, int M) {
  if (P.empty() || P[0].empty()) throw std::invalid_argument("fitting_ideal: empty presentation");
  const int m = static_cast<int>(P.size());
  const int k = static_cast<int>(P[0].size());
  GroupPtr G = P[0][0].group_ptr();
  std::vector<ZmodGR> minors;
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pick.size()) == k) {
      minors.push_back(minor_det(P, pick, cols));
      return;
    }
    for (int r = start; r < m; ++r) {
      pick.push_back(r);
      choose(r + 1);
      pick.pop_back();
    }
  };
  if (m >= k) choose(0);
  if (minors.empty()) minors.push_back(zmod_zero(G, ipow(p, M)));
  return IdealLattice::span_snf(G, p, M, minors, true);
}

}  // namespace iwasawa
