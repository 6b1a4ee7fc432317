#include "iwasawa/fields.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace iwasawa {
namespace {

std::vector<i64> closure(i64 f, const std::vector<i64>& H) {
  if (f == 1) return {0};
  std::vector<i64> gens;
  for (i64 h : H) gens.push_back(mod(h, f));
  return subgroup_generated(f, gens);
}

bool kernel_inside(i64 f, i64 fp, const std::vector<i64>& H) {
  for (i64 a = 1 % fp; a < f; a += fp) {
    if (gcd(a, f) != 1) continue;
    if (!std::binary_search(H.begin(), H.end(), a)) return false;
  }
  return true;
}

}  // namespace

bool is_true_conductor(i64 f, const std::vector<i64>& H) {
  if (f == 1) return true;
  auto S = closure(f, H);
  for (i64 l : prime_factors(f))
    if (kernel_inside(f, f / l, S)) return false;
  return true;
}

AbelianField::AbelianField(i64 f, const std::vector<i64>& H) : f_(f) {
  if (f < 1) throw std::invalid_argument("AbelianField: conductor must be positive");
  H_ = closure(f, H);
  if (!is_true_conductor(f, H_))
    throw std::invalid_argument("AbelianField: " + std::to_string(f) + " is not the conductor");
}

AbelianField AbelianField::normalized(i64 f, const std::vector<i64>& H) {
  std::vector<i64> S = closure(f, H);
  bool changed = true;
  while (changed && f > 1) {
    changed = false;
    for (i64 l : prime_factors(f)) {
      i64 fp = f / l;
      if (!kernel_inside(f, fp, S)) continue;
      std::vector<i64> img;
      for (i64 h : S) img.push_back(h % fp);
      f = fp;
      S = closure(f, img);
      changed = true;
      break;
    }
  }
  return AbelianField(f, S);
}

AbelianField AbelianField::cyclotomic(i64 m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: m must be positive");
  if (m % 4 == 2) m /= 2;
  return AbelianField(m, {1});
}

AbelianField AbelianField::quadratic(i64 D) {
  i64 f = D < 0 ? -D : D;
  if (f < 3) throw std::invalid_argument("quadratic: bad discriminant");
  std::vector<i64> H;
  for (i64 a = 1; a < f; ++a)
    if (gcd(a, f) == 1 && kronecker(D, a) == 1) H.push_back(a);
  AbelianField K(f, H);
  if (K.degree() != 2) throw std::invalid_argument("quadratic: not a fundamental discriminant");
  return K;
}

int AbelianField::degree() const {
  return static_cast<int>(euler_phi(f_) / static_cast<i64>(H_.size()));
}

bool AbelianField::is_real() const {
  if (f_ <= 2) return true;
  return std::binary_search(H_.begin(), H_.end(), f_ - 1);
}

bool AbelianField::contains(const AbelianField& sub) const {
  if (f_ % sub.f_ != 0) return false;
  for (i64 h : H_)
    if (!std::binary_search(sub.H_.begin(), sub.H_.end(), h % sub.f_)) return false;
  return true;
}

std::vector<i64> AbelianField::subgroup_at(i64 F) const {
  if (F % f_ != 0) throw std::invalid_argument("subgroup_at: not a multiple of the conductor");
  std::vector<i64> out;
  for (i64 a = 0; a < F; ++a) {
    if (gcd(a, F) != 1 && F != 1) continue;
    if (std::binary_search(H_.begin(), H_.end(), a % f_)) out.push_back(a);
  }
  return out;
}

std::string AbelianField::describe() const {
  std::ostringstream os;
  os << "f=" << f_ << " deg=" << degree();
  if (static_cast<i64>(H_.size()) < euler_phi(f_) && H_.size() <= 8) {
    os << " H={";
    for (size_t i = 0; i < H_.size(); ++i) os << (i ? "," : "") << H_[i];
    os << "}";
  }
  return os.str();
}

std::vector<AbelianField> subfields(const AbelianField& F) {
  std::set<AbelianField> out;
  for (const auto& S : supergroups(F.conductor(), F.subgroup()))
    out.insert(AbelianField::normalized(F.conductor(), S));
  return {out.begin(), out.end()};
}

std::vector<AbelianField> fields_up_to(i64 f_max) {
  std::vector<AbelianField> out{AbelianField::rationals()};
  for (i64 f = 3; f <= f_max; ++f) {
    if (f % 4 == 2) continue;
    for (const auto& S : supergroups(f, {1}))
      if (is_true_conductor(f, S)) out.emplace_back(f, S);
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 TowerLevel::pn1() const { return ipow(p, n + 1); }

TowerLevel make_tower(const AbelianField& K, i64 p, int n) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("make_tower: p must be an odd prime");
  if (n < 0) throw std::invalid_argument("make_tower: level must be >= 0");
  auto level_data = [&](int m, i64& fm, std::vector<i64>& Hm) {
    i64 q = ipow(p, m + 1);
    fm = lcm(K.conductor(), q);
    Hm.clear();
    for (i64 a : K.subgroup_at(fm))
      if (a % q == 1) Hm.push_back(a);
    AbelianField Km = AbelianField::normalized(fm, Hm);
    if (Km.conductor() != fm) throw std::logic_error("make_tower: unexpected conductor");
  };
  TowerLevel T{K, p, n, 0, {}, nullptr, nullptr, 0, 0, 0, 0};
  level_data(n, T.f_n, T.H_n);
  T.G = FiniteAbelianGroup::quotient(T.f_n, T.H_n);
  T.conj = T.G->conj();
  auto Hp = T.H_n;
  Hp.push_back(T.f_n - 1);
  T.G_plus = FiniteAbelianGroup::quotient(T.f_n, Hp);

  i64 f0;
  std::vector<i64> H0;
  level_data(0, f0, H0);
  T.m0 = valuation(f0, p) - 1;
  int i0 = 0;
  while (true) {
    int i = i0 + 1;
    i64 q = ipow(p, i + 1);
    if (f0 % q != 0) break;
    bool all = std::all_of(H0.begin(), H0.end(), [&](i64 h) { return h % q == 1; });
    if (!all) break;
    i0 = i;
  }
  T.i0 = i0;
  T.n0 = T.m0 > T.i0 ? T.m0 : 0;
  return T;
}

CycloProduct cyclotomic_unit_product(const AbelianField& F) {
  if (F.is_rational()) throw std::invalid_argument("cyclotomic_unit: F = Q");
  CycloProduct r(F.conductor());
  for (i64 h : F.subgroup()) r.add_factor(h);
  return r;
}

CycloElement cyclotomic_unit(const AbelianField& F) { return cyclotomic_unit_product(F).expand(); }

CycloProduct eps_n(const TowerLevel& T) {
  CycloProduct r(T.f_n);
  for (i64 h : T.H_n) {
    r.add_factor(h);
    r.add_factor(T.f_n - h);
  }
  return r;
}

CycloElement norm_to_subfield(const CycloElement& x, const AbelianField& F, const AbelianField& Fp) {
  if (!F.contains(Fp)) throw std::invalid_argument("norm_to_subfield: not a subfield");
  i64 f = F.conductor();
  CycloElement y = x.conductor() % f == 0 ? x.descend(f) : x.lift(lcm(x.conductor(), f));
  if (y.conductor() != f) throw std::invalid_argument("norm_to_subfield: element outside ambient field");
  // coset representatives of H' / H inside (Z/f)^x
  auto Hbig = Fp.subgroup_at(f);
  auto G = FiniteAbelianGroup::quotient(f, F.subgroup());
  std::vector<char> used(G->order(), 0);
  CycloElement r = CycloElement::one(f);
  for (i64 b : Hbig) {
    int idx = G->index_of(b);
    if (used[idx]) continue;
    used[idx] = 1;
    r *= y.galois(b);
  }
  return r;
}

std::vector<NormRelationCheck> verify_norm_relations(i64 f_max) {
  std::vector<NormRelationCheck> out;
  for (const auto& F : fields_up_to(f_max)) {
    if (F.is_rational()) continue;
    const i64 f = F.conductor();
    const CycloElement eps = cyclotomic_unit(F);
    Rational absn = norm_to_subfield(eps, F, AbelianField::rationals()).to_rational();
    auto fp = prime_factors(f);
    Rational expected = fp.size() == 1 ? Rational(fp[0]) : Rational(1);
    bool abs_ok = absn == expected;
    for (const auto& Fp : subfields(F)) {
      if (Fp.is_rational()) continue;
      const i64 g = Fp.conductor();
      std::vector<i64> rs;
      for (i64 r : fp)
        if (g % r != 0) rs.push_back(r);
      CycloElement lhs = norm_to_subfield(eps, F, Fp);
      CycloElement epsp = cyclotomic_unit(Fp);
      // expand prod (1 - s_r) with s_r = sigma_{r^{-1}}; odd subsets move to the left
      CycloElement even = CycloElement::one(g), odd = CycloElement::one(g);
      for (unsigned mask = 0; mask < (1u << rs.size()); ++mask) {
        i64 b = 1 % g;
        for (size_t k = 0; k < rs.size(); ++k)
          if (mask & (1u << k)) b = mulmod(b, invmod(rs[k], g), g);
        CycloElement t = epsp.galois(b);
        if (__builtin_popcount(mask) % 2) odd *= t;
        else even *= t;
      }
      bool ok = lhs * odd == even;
      out.push_back({F, Fp, rs, ok, abs_ok, absn});
    }
  }
  return out;
}

}  // namespace iwasawa
