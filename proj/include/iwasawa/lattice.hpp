#pragma once

#include <vector>

#include <Eigen/Dense>

#include "iwasawa/group_ring.hpp"

namespace iwasawa {

using IntMatrix = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Submodule of (Z/p^M)^d, equivalently a lattice of Z_p^d containing
/// p^M Z_p^d. Stored in Howell form: row j has leading entry p^{e_j} in
/// column j (e_j = M means the row is absent) and entries above each pivot
/// are reduced modulo that pivot. The form is canonical.
class ModLattice {
 public:
  ModLattice(i64 p, int M, int d);  // zero submodule
  static ModLattice span(i64 p, int M, int d, const std::vector<std::vector<i64>>& rows);
  static ModLattice full(i64 p, int M, int d);

  i64 p() const { return p_; }
  int precision() const { return M_; }
  int dim() const { return d_; }
  i64 modulus() const { return N_; }
  const IntMatrix& basis() const { return B_; }
  const std::vector<int>& exponents() const { return e_; }
  /// Rows with e_j < M.
  std::vector<std::vector<i64>> generators() const;

  bool contains(const std::vector<i64>& v) const;
  bool contains(const ModLattice& o) const;
  /// log_p of the index in (Z/p^M)^d.
  int log_index() const;
  bool is_zero() const;
  bool is_full() const { return log_index() == 0; }

  /// Same lattice plus p^{M'} Z_p^d, for M' <= M.
  ModLattice truncate(int Mp) const;
  /// p^k L, living modulo p^{M+k}.
  ModLattice scaled_up(int k) const;
  /// {v : v.u = 0 mod p^M for all u in L}.
  ModLattice annihilator() const;
  ModLattice operator+(const ModLattice& o) const;

  bool operator==(const ModLattice& o) const;
  bool operator!=(const ModLattice& o) const { return !(*this == o); }

 private:
  void absorb(std::vector<std::vector<i64>> pool);
  i64 p_;
  int M_;
  int d_;
  i64 N_;
  IntMatrix B_;
  std::vector<int> e_;
};

/// Fractional ideal (or plain lattice) p^{-a} U of Q_p[G], U a ModLattice
/// inside Z_p[G] containing p^M. The absolute floor M - a is the level down
/// to which the lattice is known.
class IdealLattice {
 public:
  IdealLattice(GroupPtr G, ModLattice U, int denom_exp = 0);

  /// span of integral generators mod p^M; close_under_G adds all translates.
  static IdealLattice span_snf(GroupPtr G, i64 p, int M, const std::vector<ZmodGR>& gens,
                               bool close_under_G);
  /// span of p-adically fractional rational generators, known to floor F.
  static IdealLattice span_rational(GroupPtr G, i64 p, int F, const std::vector<RationalGR>& gens,
                                    bool close_under_G);
  static IdealLattice full(GroupPtr G, i64 p, int M);

  const GroupPtr& group() const { return G_; }
  const ModLattice& lattice() const { return U_; }
  i64 p() const { return U_.p(); }
  int denom_exp() const { return a_; }
  int floor() const { return U_.precision() - a_; }
  int dim() const { return U_.dim(); }

  /// Basis elements as rationals (p^{-a} times the integral rows).
  std::vector<RationalGR> basis() const;
  /// Integral lattices only: basis elements mod p^M.
  std::vector<ZmodGR> basis_mod() const;
  bool contains(const ZmodGR& x) const;
  bool is_ideal() const;

  /// L + p^F Z_p[G], F <= floor().
  IdealLattice truncate(int F) const;
  /// Equality of L + p^F Z_p[G] and L' + p^F Z_p[G] (as represented).
  bool equals_at(const IdealLattice& o, int F) const;
  bool operator==(const IdealLattice& o) const;

  /// True when some coordinate direction is reached only through the
  /// implicit p^M part, i.e. the generators alone look rank deficient.
  bool rank_deficient() const;
  /// {y : B(x, y) in Z_p for all x in L}; for ideals this is
  /// {y : x^* y in Z_p[G] for all x in L}. The stored lattice always contains
  /// p^M, so the result is exact for the lattice as represented.
  IdealLattice dual_star() const;
  /// Image under multiplication by a rational group-ring element.
  IdealLattice times(const RationalGR& x, int F) const;
  IdealLattice minus_part(int F) const;
  IdealLattice plus_part(int F) const;
  /// log_p of [Z_p[G] : L] for integral L, computed modulo p^M.
  int log_index() const { return U_.log_index() - a_ * dim(); }

 private:
  GroupPtr G_;
  ModLattice U_;
  int a_;
};

/// Sum of two ideals of the same ambient at the common floor.
IdealLattice operator+(const IdealLattice& a, const IdealLattice& b);

/// {y in Z^d : T y = 0 mod p^k} modulo p^k, for T with rows in (Z/p^k)^d.
ModLattice kernel_mod(const std::vector<std::vector<i64>>& T, i64 p, int k, int d);

/// Ideal of maximal minors of a presentation (rows are relations among the
/// generators of the module, all entries in Z/p^M[G]).
IdealLattice fitting_ideal(const std::vector<std::vector<ZmodGR>>& presentation, i64 p, int M);

}  // namespace iwasawa
