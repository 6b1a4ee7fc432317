#include "iwasawa/group.hpp"

#include <algorithm>
#include <set>

namespace iwasawa {

std::vector<i64> subgroup_generated(i64 f, const std::vector<i64>& gens) {
  if (f == 1) return {0};
  std::vector<char> in(f, 0);
  std::vector<i64> elems{1 % f};
  in[1 % f] = 1;
  for (size_t k = 0; k < elems.size(); ++k) {
    for (i64 g : gens) {
      i64 x = mulmod(elems[k], mod(g, f), f);
      if (gcd(x, f) != 1) throw std::invalid_argument("subgroup_generated: non-unit generator");
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<i64>> supergroups(i64 f, const std::vector<i64>& H) {
  std::vector<i64> units;
  for (i64 a = 0; a < f; ++a)
    if (gcd(a, f) == 1) units.push_back(a);
  if (f == 1) units = {0};
  std::set<std::vector<i64>> seen;
  std::vector<std::vector<i64>> out;
  auto start = subgroup_generated(f, H);
  seen.insert(start);
  out.push_back(start);
  for (size_t k = 0; k < out.size(); ++k) {
    const auto cur = out[k];
    for (i64 g : units) {
      if (std::binary_search(cur.begin(), cur.end(), g)) continue;
      auto gens = cur;
      gens.push_back(g);
      auto next = subgroup_generated(f, gens);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

FiniteAbelianGroup::FiniteAbelianGroup(i64 f, std::vector<i64> H) : f_(f), H_(std::move(H)) {
  index_.assign(f, -1);
  for (i64 a = 0; a < f; ++a) {
    if (gcd(a, f) != 1 && f != 1) continue;
    if (index_[a] != -1) continue;
    int idx = static_cast<int>(reps_.size());
    reps_.push_back(a);
    for (i64 h : H_) index_[mulmod(a, h, f)] = idx;
  }
  // identity has least residue 1 (or 0 when f = 1), hence index 0
  inv_.resize(reps_.size());
  for (int i = 0; i < order(); ++i) inv_[i] = f == 1 ? 0 : index_of(invmod(reps_[i], f));
}

GroupPtr FiniteAbelianGroup::units(i64 f) { return quotient(f, {1}); }

GroupPtr FiniteAbelianGroup::quotient(i64 f, const std::vector<i64>& H) {
  if (f < 1) throw std::invalid_argument("group: modulus must be positive");
  return GroupPtr(new FiniteAbelianGroup(f, subgroup_generated(f, H)));
}

int FiniteAbelianGroup::index_of(i64 a) const { return index_[mod(a, f_)]; }

int FiniteAbelianGroup::pow(int i, i64 e) const {
  if (e < 0) {
    i = inv_[i];
    e = -e;
  }
  return index_of(powmod(reps_[i], e, f_));
}

int FiniteAbelianGroup::element_order(int i) const {
  int k = 1;
  int x = i;
  while (x != 0) {
    x = mul(x, i);
    ++k;
  }
  return k;
}

QuotientMap make_quotient_map(GroupPtr from, GroupPtr to) {
  if (from->modulus() % to->modulus() != 0)
    throw std::invalid_argument("quotient map: modulus does not divide");
  QuotientMap m{from, to, {}, {}};
  for (i64 h : from->kernel())
    if (to->index_of(h) != 0) throw std::invalid_argument("quotient map: kernel not contained");
  m.image.resize(from->order());
  m.fibers.assign(to->order(), {});
  for (int i = 0; i < from->order(); ++i) {
    int j = to->index_of(from->rep(i));
    m.image[i] = j;
    m.fibers[j].push_back(i);
  }
  return m;
}

}  // namespace iwasawa
