#include "iwasawa/group_ring.hpp"

namespace iwasawa {

ZmodGR reduce_mod(const RationalGR& x, i64 p, int M) {
  i64 m = ipow(p, M);
  ZmodGR r = zmod_zero(x.group_ptr(), m);
  for (int i = 0; i < x.size(); ++i) r[i] = Zmod(rational_mod(x[i], p, M), m);
  return r;
}

std::vector<i64> to_vector(const ZmodGR& x) {
  std::vector<i64> v(x.size());
  for (int i = 0; i < x.size(); ++i) v[i] = x[i].value();
  return v;
}

ZmodGR from_vector(GroupPtr G, const std::vector<i64>& v, i64 m) {
  ZmodGR r = zmod_zero(std::move(G), m);
  if (static_cast<int>(v.size()) != r.size()) throw std::invalid_argument("from_vector: size mismatch");
  for (int i = 0; i < r.size(); ++i) r[i] = Zmod(v[i], m);
  return r;
}

ZmodGR involution_iota(const ZmodGR& x, const std::vector<i64>& chi_cyc) {
  if (static_cast<int>(chi_cyc.size()) != x.size())
    throw std::invalid_argument("involution_iota: missing character values");
  const auto& G = x.group();
  ZmodGR r = zmod_zero(x.group_ptr(), x.zero().modulus());
  for (int i = 0; i < x.size(); ++i)
    r[G.inv(i)] = x[i] * Zmod(chi_cyc[i], x.zero().modulus());
  return r;
}

namespace {

template <class S>
GroupRingElement<S> split(const GroupRingElement<S>& x, const S& half, bool plus) {
  const int c = x.group().conj();
  GroupRingElement<S> r(x.group_ptr(), x.zero());
  for (int i = 0; i < x.size(); ++i) {
    int j = x.group().mul(c, i);
    S s = plus ? S(x[i] + x[j]) : S(x[i] - x[j]);
    r[i] = s * half;
  }
  return r;
}

}  // namespace

RationalGR plus_part(const RationalGR& x) { return split(x, Rational(1, 2), true); }
RationalGR minus_part(const RationalGR& x) { return split(x, Rational(1, 2), false); }
ZmodGR plus_part(const ZmodGR& x) {
  i64 m = x.zero().modulus();
  return split(x, Zmod(invmod(2, m), m), true);
}
ZmodGR minus_part(const ZmodGR& x) {
  i64 m = x.zero().modulus();
  return split(x, Zmod(invmod(2, m), m), false);
}
ComplexGR plus_part(const ComplexGR& x) { return split(x, Complex(0.5L), true); }

std::vector<ZmodGR> idempotents_ej(i64 p, int M) {
  if (M < 1) throw std::invalid_argument("idempotents_ej: precision must be >= 1");
  i64 m = ipow(p, M);
  auto G = FiniteAbelianGroup::units(p);
  i64 inv = invmod(p - 1, m);
  std::vector<ZmodGR> out;
  for (i64 j = 0; j < p - 1; ++j) {
    ZmodGR e = zmod_zero(G, m);
    for (int i = 0; i < G->order(); ++i) {
      i64 w = teichmuller(G->rep(i), p, M);
      // omega^{-j}(a)
      i64 wj = powmod(invmod(w, m), j, m);
      e[i] = Zmod(mulmod(wj, inv, m), m);
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace iwasawa
