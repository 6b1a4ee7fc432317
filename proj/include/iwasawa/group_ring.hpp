#pragma once

#include <functional>
#include <vector>

#include "iwasawa/arith.hpp"
#include "iwasawa/cyclo.hpp"
#include "iwasawa/group.hpp"

namespace iwasawa {

/// Element sum_g c_g g of R[G]. R is one of Rational, Zmod, Complex or
/// CycloElement; a zero scalar is supplied at construction so that rings
/// with runtime parameters (the modulus of Zmod, the conductor of a
/// CycloElement) need no global state.
template <class Scalar>
class GroupRingElement {
 public:
  GroupRingElement(GroupPtr G, Scalar zero) : G_(std::move(G)), c_(G_->order(), zero), zero_(zero) {}

  static GroupRingElement basis(GroupPtr G, int g, Scalar zero, Scalar one) {
    GroupRingElement x(std::move(G), zero);
    x.c_[g] = one;
    return x;
  }

  const FiniteAbelianGroup& group() const { return *G_; }
  const GroupPtr& group_ptr() const { return G_; }
  int size() const { return static_cast<int>(c_.size()); }
  const Scalar& zero() const { return zero_; }
  Scalar& operator[](int g) { return c_[g]; }
  const Scalar& operator[](int g) const { return c_[g]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  GroupRingElement operator+(const GroupRingElement& o) const {
    check(o);
    GroupRingElement r = *this;
    for (int i = 0; i < size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    return r;
  }
  GroupRingElement operator-(const GroupRingElement& o) const {
    check(o);
    GroupRingElement r = *this;
    for (int i = 0; i < size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
    return r;
  }
  GroupRingElement operator-() const {
    GroupRingElement r = *this;
    for (auto& x : r.c_) x = zero_ - x;
    return r;
  }
  GroupRingElement operator*(const GroupRingElement& o) const {
    check(o);
    GroupRingElement r(G_, zero_);
    for (int i = 0; i < size(); ++i) {
      if (c_[i] == zero_) continue;
      for (int j = 0; j < size(); ++j) {
        if (o.c_[j] == zero_) continue;
        int k = G_->mul(i, j);
        r.c_[k] = r.c_[k] + c_[i] * o.c_[j];
      }
    }
    return r;
  }
  GroupRingElement scaled(const Scalar& s) const {
    GroupRingElement r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }
  GroupRingElement& operator+=(const GroupRingElement& o) { return *this = *this + o; }
  GroupRingElement& operator-=(const GroupRingElement& o) { return *this = *this - o; }
  GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }
  bool operator==(const GroupRingElement& o) const { return G_->same_as(*o.G_) && c_ == o.c_; }
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!(x == zero_)) return false;
    return true;
  }

  /// x -> x^*, g -> g^{-1}.
  GroupRingElement star() const {
    GroupRingElement r(G_, zero_);
    for (int i = 0; i < size(); ++i) r.c_[G_->inv(i)] = c_[i];
    return r;
  }

  /// g * x for a group element g.
  GroupRingElement translate(int g) const {
    GroupRingElement r(G_, zero_);
    for (int i = 0; i < size(); ++i) r.c_[G_->mul(g, i)] = c_[i];
    return r;
  }

  Scalar augmentation() const {
    Scalar s = zero_;
    for (const auto& x : c_) s = s + x;
    return s;
  }

  template <class T, class F>
  GroupRingElement<T> map(T zero, F fn) const {
    GroupRingElement<T> r(G_, zero);
    for (int i = 0; i < size(); ++i) r[i] = fn(c_[i]);
    return r;
  }

 private:
  void check(const GroupRingElement& o) const {
    if (!G_->same_as(*o.G_)) throw std::invalid_argument("group ring: mixed ambients");
  }
  GroupPtr G_;
  std::vector<Scalar> c_;
  Scalar zero_;
};

using RationalGR = GroupRingElement<Rational>;
using ZmodGR = GroupRingElement<Zmod>;
using ComplexGR = GroupRingElement<Complex>;
using CycloGR = GroupRingElement<CycloElement>;

inline ZmodGR zmod_zero(GroupPtr G, i64 m) { return ZmodGR(std::move(G), Zmod(0, m)); }
inline ZmodGR zmod_basis(GroupPtr G, int g, i64 m) {
  return ZmodGR::basis(std::move(G), g, Zmod(0, m), Zmod(1, m));
}
inline RationalGR rational_zero(GroupPtr G) { return RationalGR(std::move(G), Rational(0)); }

/// Reduction of a p-integral rational element modulo p^M.
ZmodGR reduce_mod(const RationalGR& x, i64 p, int M);
/// Coefficient vector of a Zmod element.
std::vector<i64> to_vector(const ZmodGR& x);
ZmodGR from_vector(GroupPtr G, const std::vector<i64>& v, i64 m);

/// iota(sum a_g g) = sum a_g chi(g) g^{-1}; chi given per group index.
ZmodGR involution_iota(const ZmodGR& x, const std::vector<i64>& chi_cyc);

/// e_+ x and e_- x for e_{+-} = (1 +- c)/2, c = class of -1.
RationalGR plus_part(const RationalGR& x);
RationalGR minus_part(const RationalGR& x);
ZmodGR plus_part(const ZmodGR& x);
ZmodGR minus_part(const ZmodGR& x);
ComplexGR plus_part(const ComplexGR& x);

/// Image under the ring map R[G] -> R[G'] induced by a quotient map.
template <class S>
GroupRingElement<S> push_forward(const GroupRingElement<S>& x, const QuotientMap& m) {
  if (!x.group().same_as(*m.from)) throw std::invalid_argument("push_forward: wrong source group");
  GroupRingElement<S> r(m.to, x.zero());
  for (int i = 0; i < x.size(); ++i) r[m.image[i]] = r[m.image[i]] + x[i];
  return r;
}

/// Additive map R[G'] -> R[G] sending g' to the sum of its preimages.
template <class S>
GroupRingElement<S> corestriction(const GroupRingElement<S>& x, const QuotientMap& m) {
  if (!x.group().same_as(*m.to)) throw std::invalid_argument("corestriction: wrong source group");
  GroupRingElement<S> r(m.from, x.zero());
  for (int j = 0; j < x.size(); ++j)
    for (int i : m.fibers[j]) r[i] = x[j];
  return r;
}

/// Idempotents e_j (j = 0..p-2) of Z/p^M[G_0], G_0 = (Z/p)^x, attached to
/// powers of the Teichmuller character.
std::vector<ZmodGR> idempotents_ej(i64 p, int M);

}  // namespace iwasawa
