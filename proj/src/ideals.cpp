#include "iwasawa/ideals.hpp"

#include <algorithm>
#include <set>

namespace iwasawa {

ZmodGR dbar_generator(const TowerLevel& T, const SplitPrimeData& Q) {
  const i64 N = T.pn1();
  ZmodGR row = frobenius_pairing_row(eps_n(T), Q);
  auto m = make_quotient_map(T.G, T.G_plus);
  return push_forward(row, m).scaled(Zmod(invmod(2, N), N));
}

DbarIdeal sample_dbar(const TowerLevel& T, const SampleOptions& opt) {
  if (opt.stabilize < 1) throw std::invalid_argument("sample_dbar: stabilization window must be positive");
  const i64 p = T.p;
  const int M = T.n + 1;
  const i64 N = T.pn1();
  const int d = T.G_plus->order();
  DbarIdeal D{T, IdealLattice(T.G_plus, ModLattice(p, M, d), 0), {}, {}, 0, false};
  const auto eps = eps_n(T);
  const auto half = Zmod(invmod(2, N), N);
  i64 next = opt.q_min;
  long seq = 0;
  while (static_cast<int>(D.primes.size()) < opt.cap) {
    auto batch = find_split_primes(T, 16, next);
    next = batch.back().q + 1;
    for (const auto& Q : batch) {
      if (opt.parity >= 0 && (seq++ % 2) != opt.parity) continue;
      ZmodGR row = zmod_zero(T.G, N);
      try {
        row = frobenius_pairing_row(eps, Q);
      } catch (const std::domain_error&) {
        continue;
      }
      D.rows.push_back(row.scaled(half));
      D.primes.push_back(Q.q);
      ZmodGR gen = push_forward(row, make_quotient_map(T.G, T.G_plus)).scaled(half);
      auto S = IdealLattice::span_snf(T.G_plus, p, M, {gen}, true);
      int before = D.lattice.log_index();
      D.lattice = D.lattice + S;
      if (D.lattice.log_index() < before) D.quiet_run = 0;
      else ++D.quiet_run;
      if (D.quiet_run >= opt.stabilize) {
        D.stabilized = true;
        return D;
      }
      if (static_cast<int>(D.primes.size()) >= opt.cap) break;
    }
  }
  return D;
}

bool AnnihilationReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const AnnihilationEntry& e) { return e.ok; });
}

int act_on_class(const ZmodGR& x, int cls, const FormClassGroup& C) {
  const auto& G = x.group();
  int r = C.identity();
  for (int g = 0; g < G.order(); ++g) {
    i64 c = x[g].value();
    if (c == 0) continue;
    int t = kronecker(C.disc(), G.rep(g)) == 1 ? cls : C.galois(cls);
    r = C.mul(r, C.pow(t, c));
  }
  return r;
}

AnnihilationReport check_annihilation(const DbarIdeal& D, const FormClassGroup& C, bool force_augmentation) {
  const TowerLevel& T = D.T;
  const AbelianField& K = T.base;
  if (K.degree() != 2 || !K.is_real() || K.conductor() != C.disc() || T.p != 3 || T.n != 0)
    throw std::invalid_argument("check_annihilation: mismatched groups (need K real quadratic, p = 3, n = 0)");
  AnnihilationReport rep{force_augmentation || T.n < T.n0, false, {}};
  auto P = C.p_part(T.p);
  auto gens = C.p_part_generators(T.p);
  rep.vacuous = gens.empty();
  std::set<int> pA;  // p^{n+1} A
  for (int y : P) pA.insert(C.pow(y, T.pn1()));
  auto basis = D.lattice.basis_mod();
  std::vector<std::pair<int, ZmodGR>> tests;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!rep.augmentation) {
      tests.emplace_back(static_cast<int>(i), basis[i]);
      continue;
    }
    for (int g = 1; g < T.G_plus->order(); ++g) {
      auto gm1 = zmod_basis(T.G_plus, g, T.pn1()) - zmod_basis(T.G_plus, 0, T.pn1());
      tests.emplace_back(static_cast<int>(i), gm1 * basis[i]);
    }
  }
  for (const auto& [i, x] : tests)
    for (int c : gens) {
      int r = act_on_class(x, c, C);
      rep.entries.push_back({i, c, r, pA.count(r) > 0});
    }
  return rep;
}

DescentReport descend_check(const DbarIdeal& Dk, const DbarIdeal& Df) {
  const TowerLevel &Tk = Dk.T, &Tf = Df.T;
  if (!Dk.stabilized || !Df.stabilized) throw std::invalid_argument("descend_check: unstabilized input");
  if (Tk.p != Tf.p || Tk.n != Tf.n || !Tk.base.contains(Tf.base))
    throw std::invalid_argument("descend_check: F must be a subfield of K at the same p and n");
  const i64 p = Tk.p, N = Tk.pn1();
  const int M = Tk.n + 1;
  DescentReport rep{{}, false, 0, 0};
  i64 fk0 = lcm(Tk.base.conductor(), p), ff0 = lcm(Tf.base.conductor(), p);
  for (i64 r : prime_factors(fk0))
    if (ff0 % r != 0) rep.primes.push_back(r);
  auto pi = make_quotient_map(Tk.G_plus, Tf.G_plus);
  std::vector<ZmodGR> img;
  for (const auto& b : Dk.lattice.basis_mod()) img.push_back(push_forward(b, pi));
  if (img.empty()) img.push_back(zmod_zero(Tf.G_plus, N));
  auto image = IdealLattice::span_snf(Tf.G_plus, p, M, img, true);
  ZmodGR x = zmod_basis(Tf.G_plus, 0, N);
  for (i64 r : rep.primes) {
    int s = Tf.G_plus->index_of(invmod(r, Tf.f_n));
    x = x * (zmod_basis(Tf.G_plus, 0, N) - zmod_basis(Tf.G_plus, s, N));
  }
  std::vector<ZmodGR> exp;
  for (const auto& b : Df.lattice.basis_mod()) exp.push_back(x * b);
  if (exp.empty()) exp.push_back(zmod_zero(Tf.G_plus, N));
  auto expected = IdealLattice::span_snf(Tf.G_plus, p, M, exp, true);
  rep.equal = image.lattice() == expected.lattice();
  rep.log_index_image = image.log_index();
  rep.log_index_expected = expected.log_index();
  return rep;
}

ZmodGR decomposition_norm(const TowerLevel& T, i64 r) {
  const i64 f = T.f_n;
  i64 rv = 1, fp = f;
  while (fp % r == 0) {
    fp /= r;
    rv *= r;
  }
  std::vector<i64> gens;
  // inertia: units = 1 mod f'
  for (i64 a = 1; a < f; a += fp)
    if (gcd(a, f) == 1) gens.push_back(a);
  // a Frobenius lift: = r mod f', = 1 mod r^v
  for (i64 a = 1; a < f; a += rv)
    if (gcd(a, f) == 1 && mod(a - r, fp) == 0) {
      gens.push_back(a);
      break;
    }
  if (f == 1) gens = {0};
  std::set<int> idx;
  for (i64 a : subgroup_generated(f, gens)) idx.insert(T.G_plus->index_of(a));
  ZmodGR s = zmod_zero(T.G_plus, T.pn1());
  for (int i : idx) s[i] = Zmod(1, T.pn1());
  return s;
}

bool norm_kill_check(const DbarIdeal& D, std::vector<i64>* failing) {
  bool ok = true;
  for (i64 r : prime_factors(D.T.f_n)) {
    ZmodGR Nr = decomposition_norm(D.T, r);
    for (const auto& x : D.lattice.basis_mod())
      if (!(Nr * x).is_zero()) {
        ok = false;
        if (failing) failing->push_back(r);
        break;
      }
  }
  return ok;
}

IdealLattice annihilator_ideal(const IdealLattice& I) {
  if (I.denom_exp() != 0) throw std::invalid_argument("annihilator_ideal: integral ideals only");
  const auto& G = *I.group();
  const int d = G.order();
  const i64 p = I.p();
  const int M = I.lattice().precision();
  std::vector<std::vector<i64>> T;
  for (const auto& x : I.basis_mod()) {
    // (x y)_k = sum_j x_{k j^{-1}} y_j
    for (int k = 0; k < d; ++k) {
      std::vector<i64> row(d);
      for (int j = 0; j < d; ++j) row[j] = x[G.mul(k, G.inv(j))].value();
      T.push_back(row);
    }
  }
  if (T.empty()) return IdealLattice::full(I.group(), p, M);
  return IdealLattice(I.group(), kernel_mod(T, p, M, d), 0);
}

DualReport dual_characterization_check(const DbarIdeal& D, const std::vector<ZmodGR>& relations) {
  if (!D.T.base.is_rational()) throw std::invalid_argument("dual_characterization_check: K = Q only");
  const int M = D.T.n + 1;
  std::vector<ZmodGR> rel = relations;
  if (rel.empty()) rel.push_back(zmod_zero(D.T.G_plus, D.T.pn1()));
  auto R = IdealLattice::span_snf(D.T.G_plus, D.T.p, M, rel, true);
  auto dual = annihilator_ideal(R);
  return {dual.lattice() == D.lattice.lattice(), dual.log_index(), D.lattice.log_index()};
}

int mod_compatibility_check(const AbelianField& K, i64 p, int n, int m, int count) {
  if (m < n) throw std::invalid_argument("mod_compatibility_check: need m >= n");
  auto Tn = make_tower(K, p, n), Tm = make_tower(K, p, m);
  auto en = eps_n(Tn), em = eps_n(Tm);
  auto pi = make_quotient_map(Tm.G, Tn.G);
  const i64 Nn = Tn.pn1();
  int compared = 0;
  for (const auto& Qm : find_split_primes(Tm, count)) {
    auto Qn = make_split_prime(Tn, Qm.q, powmod(Qm.u, Tm.f_n / Tn.f_n, Qm.q));
    ZmodGR rm = frobenius_pairing_row(em, Qm);
    auto reduced = rm.map(Zmod(0, Nn), [&](const Zmod& z) { return Zmod(z.value(), Nn); });
    if (!(push_forward(reduced, pi) == frobenius_pairing_row(en, Qn))) return -1;
    ++compared;
  }
  return compared;
}

}  // namespace iwasawa
