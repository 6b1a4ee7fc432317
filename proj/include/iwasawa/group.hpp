#pragma once

#include <memory>
#include <vector>

#include "iwasawa/arith.hpp"

namespace iwasawa {

class FiniteAbelianGroup;
using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

/// (Z/f)^x / H, elements indexed 0..order-1 in increasing order of their
/// least residue. Index 0 is always the identity.
class FiniteAbelianGroup {
 public:
  static GroupPtr units(i64 f);
  static GroupPtr quotient(i64 f, const std::vector<i64>& H);

  i64 modulus() const { return f_; }
  int order() const { return static_cast<int>(reps_.size()); }
  i64 rep(int i) const { return reps_[i]; }
  const std::vector<i64>& reps() const { return reps_; }
  /// Index of the class of a (any integer); -1 if gcd(a, f) != 1.
  int index_of(i64 a) const;
  int mul(int i, int j) const { return index_of(mulmod(reps_[i], reps_[j], f_)); }
  int inv(int i) const { return inv_[i]; }
  int pow(int i, i64 e) const;
  int identity() const { return 0; }
  int conj() const { return index_of(f_ - 1); }
  const std::vector<i64>& kernel() const { return H_; }
  int element_order(int i) const;

  bool same_as(const FiniteAbelianGroup& o) const { return f_ == o.f_ && H_ == o.H_; }

 private:
  FiniteAbelianGroup(i64 f, std::vector<i64> H);
  i64 f_;
  std::vector<i64> H_;
  std::vector<i64> reps_;
  std::vector<int> index_;  // residue -> index
  std::vector<int> inv_;
};

/// Closure of a generating set inside (Z/f)^x, sorted.
std::vector<i64> subgroup_generated(i64 f, const std::vector<i64>& gens);

/// All subgroups of (Z/f)^x containing H (each sorted), deterministic order.
std::vector<std::vector<i64>> supergroups(i64 f, const std::vector<i64>& H);

/// Natural surjection between quotients of unit groups, from (Z/F)^x/H_F to
/// (Z/f)^x/H_f with f | F.
struct QuotientMap {
  GroupPtr from;
  GroupPtr to;
  std::vector<int> image;                 // index in `from` -> index in `to`
  std::vector<std::vector<int>> fibers;   // index in `to` -> preimages
};

/// Throws std::invalid_argument if the groups are incompatible.
QuotientMap make_quotient_map(GroupPtr from, GroupPtr to);

}  // namespace iwasawa
