#include "doctest.h"
#include "iwasawa/ideals.hpp"

using namespace iwasawa;

namespace {

bool is_ideal_lattice(const IdealLattice& L) {
  for (const auto& b : L.basis_mod())
    for (int g = 0; g < L.group()->order(); ++g)
      if (!L.contains(b.translate(g))) return false;
  return true;
}

}  // namespace

TEST_CASE("Dbar is full for K = Q and small p") {
  for (i64 p : {3, 5, 7})
    for (int n : {0, 1}) {
      auto T = make_tower(AbelianField::rationals(), p, n);
      auto D = sample_dbar(T);
      CHECK(D.stabilized);
      CHECK(D.lattice.lattice().is_full());
      CHECK(certify_plus_part_trivial(p, n).certified);
      for (const auto& r : D.rows) CHECK(minus_part(r).is_zero());
      CHECK(is_ideal_lattice(D.lattice));
    }
}

TEST_CASE("Dbar for real quadratic fields with 3 | h") {
  for (i64 Dsc : {229, 257, 316}) {
    auto K = AbelianField::quadratic(Dsc);
    auto T = make_tower(K, 3, 0);
    CHECK(T.n0 == 0);
    auto D = sample_dbar(T);
    CHECK(D.stabilized);
    // the ideal is proper: Cl(K)[3] is nontrivial
    CHECK_FALSE(D.lattice.lattice().is_full());
    CHECK(is_ideal_lattice(D.lattice));
    for (const auto& r : D.rows) CHECK(minus_part(r).is_zero());

    FormClassGroup C(Dsc);
    auto rep = check_annihilation(D, C);
    CHECK_FALSE(rep.vacuous);
    CHECK_FALSE(rep.augmentation);
    CHECK(rep.all_ok());
    // the checker is not blind: the unit ideal does not annihilate
    DbarIdeal full = D;
    full.lattice = IdealLattice::full(T.G_plus, 3, 1);
    CHECK_FALSE(check_annihilation(full, C).all_ok());
    auto aug = check_annihilation(D, C, true);
    CHECK(aug.augmentation);
    CHECK(aug.all_ok());

    // disjoint samples agree
    SampleOptions even, odd;
    even.parity = 0;
    odd.parity = 1;
    auto De = sample_dbar(T, even), Do = sample_dbar(T, odd);
    CHECK(De.lattice.lattice() == Do.lattice.lattice());
    CHECK(De.lattice.lattice() == D.lattice.lattice());
  }
}

TEST_CASE("annihilation: trivial module and a 3-ramified field") {
  auto T5 = make_tower(AbelianField::quadratic(5), 3, 0);
  auto D5 = sample_dbar(T5);
  // h = 1 and 3 inert: the sigma-odd component survives
  CHECK(D5.lattice.log_index() == 1);
  auto rep = check_annihilation(D5, FormClassGroup(5));
  CHECK(rep.vacuous);
  CHECK(rep.all_ok());

  auto K = AbelianField::quadratic(321);
  auto T = make_tower(K, 3, 0);
  auto D = sample_dbar(T);
  FormClassGroup C(321);
  REQUIRE(C.wide_order() % 3 == 0);
  auto aug = check_annihilation(D, C, true);
  CHECK(aug.augmentation);
  CHECK_FALSE(aug.vacuous);
  CHECK(aug.all_ok());
  CHECK(check_annihilation(D, C).all_ok());

  CHECK_THROWS_AS(check_annihilation(sample_dbar(make_tower(AbelianField::rationals(), 3, 0)), C),
                  std::invalid_argument);
}

TEST_CASE("descent and norm kill") {
  auto Dq = sample_dbar(make_tower(AbelianField::rationals(), 3, 0));
  auto same = descend_check(Dq, Dq);
  CHECK(same.primes.empty());
  CHECK(same.equal);

  for (i64 Dsc : {5, 229, 12}) {
    auto Dk = sample_dbar(make_tower(AbelianField::quadratic(Dsc), 3, 0));
    auto rep = descend_check(Dk, Dq);
    CHECK(rep.equal);
    if (Dsc == 5) CHECK(rep.primes == std::vector<i64>{5});
    if (Dsc == 12) CHECK(rep.primes == std::vector<i64>{2});
  }

  auto D5 = sample_dbar(make_tower(AbelianField::quadratic(5), 3, 0));
  std::vector<i64> failing;
  CHECK(norm_kill_check(D5, &failing));
  CHECK(failing.empty());
  // for a prime-power conductor the quotient is finite and nothing is killed
  CHECK_FALSE(norm_kill_check(Dq));

  DbarIdeal unstable = Dq;
  unstable.stabilized = false;
  CHECK_THROWS_AS(descend_check(unstable, Dq), std::invalid_argument);
}

TEST_CASE("dual characterization for K = Q") {
  for (i64 p : {3, 5, 7}) {
    auto D = sample_dbar(make_tower(AbelianField::rationals(), p, 0));
    auto rep = dual_characterization_check(D, {});
    CHECK(rep.equal);
    CHECK(rep.log_index_dual == 0);
  }
  // relations read off from the symbols themselves: the double annihilator
  for (i64 Dsc : {5, 229}) {
    auto Dk = sample_dbar(make_tower(AbelianField::quadratic(Dsc), 3, 0));
    auto ann = annihilator_ideal(Dk.lattice);
    CHECK(ann.log_index() + Dk.lattice.log_index() == 2);
    CHECK(annihilator_ideal(ann).lattice() == Dk.lattice.lattice());
  }
  auto Dk = sample_dbar(make_tower(AbelianField::quadratic(229), 3, 0));
  CHECK_THROWS_AS(dual_characterization_check(Dk, {}), std::invalid_argument);
}

TEST_CASE("mod compatibility of rows across levels") {
  CHECK(mod_compatibility_check(AbelianField::rationals(), 3, 0, 1, 8) == 8);
  CHECK(mod_compatibility_check(AbelianField::rationals(), 5, 0, 1, 5) == 5);
  CHECK(mod_compatibility_check(AbelianField::quadratic(5), 3, 0, 1, 5) == 5);
}
