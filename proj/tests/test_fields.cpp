#include <random>

#include "doctest.h"
#include "iwasawa/fields.hpp"

using namespace iwasawa;

namespace {

CycloElement random_element(i64 f, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (i64 k = 0; k < f; ++k) c.emplace_back(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
  return CycloElement::from_coeffs(f, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<i64>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<i64>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient -2
  const auto& c = cyclotomic_polynomial(105);
  CHECK(c.size() == 49);
  CHECK(*std::min_element(c.begin(), c.end()) == -2);
}

TEST_CASE("element arithmetic and canonical form") {
  std::mt19937_64 rng(7);
  for (i64 f : {3, 5, 8, 9, 12, 15}) {
    for (int t = 0; t < 10; ++t) {
      CycloElement x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == CycloElement::zero(f));
      // reducing an already reduced vector changes nothing
      CHECK(CycloElement::from_coeffs(f, x.coefficients()) == x);
    }
  }
  // xi_3^2 = -1 - xi_3
  CHECK(CycloElement::root_power(3, 2) == -CycloElement::one(3) - CycloElement::root_power(3, 1));
  // mixed conductors compare after lifting: xi_6 = -xi_3^2
  CHECK(CycloElement::root_power(6, 1) == -CycloElement::root_power(3, 2));
}

TEST_CASE("Galois action is a group action") {
  std::mt19937_64 rng(11);
  for (i64 f : {7, 9, 20}) {
    CycloElement x = random_element(f, rng);
    for (i64 a = 1; a < f; ++a) {
      if (gcd(a, f) != 1) continue;
      for (i64 b = 1; b < f; b += 3) {
        if (gcd(b, f) != 1) continue;
        CHECK(x.galois(b).galois(a) == x.galois(mulmod(a, b, f)));
      }
    }
    CHECK(x.galois(1) == x);
  }
}

TEST_CASE("abelian fields and conductors") {
  CHECK(AbelianField::cyclotomic(6) == AbelianField::cyclotomic(3));
  CHECK_THROWS_AS(AbelianField(15, {1, 4, 11, 14}), std::invalid_argument);  // this is Q(sqrt 5)... at 15
  AbelianField K5 = AbelianField::quadratic(5);
  CHECK(K5.conductor() == 5);
  CHECK(K5.subgroup() == std::vector<i64>{1, 4});
  CHECK(K5.is_real());
  CHECK(!AbelianField::quadratic(-3).is_real());
  CHECK(AbelianField::normalized(15, {1, 4, 11, 14}) == K5);
  auto subs = subfields(AbelianField::cyclotomic(15));
  // Q(mu_15) has cyclic x Klein... (Z/15)^x = C2 x C4: 8 subgroups
  CHECK(subs.size() == 8);
  // count of abelian fields of conductor exactly 5: Q(sqrt5), Q(mu_5)
  int c5 = 0;
  for (const auto& F : fields_up_to(12))
    if (F.conductor() == 5) ++c5;
  CHECK(c5 == 2);
}

TEST_CASE("make_tower") {
  auto T = make_tower(AbelianField::rationals(), 3, 0);
  CHECK(T.f_n == 3);
  CHECK(T.G->order() == 2);
  CHECK(T.G->rep(T.conj) == 2);
  CHECK(make_tower(AbelianField::rationals(), 3, 1).G->order() == 6);

  auto T5 = make_tower(AbelianField::quadratic(5), 3, 0);
  CHECK(T5.f_n == 15);
  CHECK(T5.G->order() == 4);
  CHECK(T5.m0 == 0);
  CHECK(T5.i0 == 0);
  CHECK(T5.n0 == 0);

  // Q(mu_9)^+ : K_0 = Q(mu_9), so i0 = m0 = 1 and n0 = 0
  auto T9 = make_tower(AbelianField(9, {1, 8}), 3, 0);
  CHECK(T9.f_n == 9);
  CHECK(T9.i0 == 1);
  CHECK(T9.m0 == 1);
  CHECK(T9.n0 == 0);

  // cubic field of conductor 63 whose character mixes the order-3 characters
  // mod 9 and mod 7: K_0 contains mu_3 but not mu_9, f_0 = 7 * 9, so n0 = m0 = 1
  std::vector<i64> H;
  for (i64 a = 1; a < 63; ++a) {
    if (gcd(a, 63) != 1) continue;
    i64 i9 = 0, i7 = 0;
    while (powmod(2, i9, 9) != a % 9) ++i9;
    while (powmod(3, i7, 7) != a % 7) ++i7;
    if ((i9 + i7) % 3 == 0) H.push_back(a);
  }
  AbelianField C(63, H);
  CHECK(C.degree() == 3);
  auto T63 = make_tower(C, 3, 0);
  CHECK(T63.i0 == 0);
  CHECK(T63.m0 == 1);
  CHECK(T63.n0 == 1);

  CHECK_THROWS_AS(make_tower(AbelianField::rationals(), 2, 0), std::invalid_argument);
}

TEST_CASE("cyclotomic units and absolute norms") {
  auto Q = AbelianField::rationals();
  auto F5 = AbelianField::cyclotomic(5);
  CHECK(cyclotomic_unit(F5) == CycloElement::one(5) - CycloElement::root_power(5, 1));
  CHECK(norm_to_subfield(cyclotomic_unit(F5), F5, Q).to_rational() == 5);
  auto F9 = AbelianField::cyclotomic(9);
  CHECK(norm_to_subfield(cyclotomic_unit(F9), F9, Q).to_rational() == 3);
  auto F15 = AbelianField::cyclotomic(15);
  CHECK(norm_to_subfield(cyclotomic_unit(F15), F15, Q).to_rational() == 1);
  CHECK_THROWS_AS(cyclotomic_unit(Q), std::invalid_argument);
}

TEST_CASE("norm relations, explicit pairs") {
  auto F15 = AbelianField::cyclotomic(15), F5 = AbelianField::cyclotomic(5);
  CycloElement e5 = cyclotomic_unit(F5);
  // N(eps_15) * sigma_3^{-1}(eps_5) = eps_5 with 3^{-1} = 2 mod 5
  CHECK(norm_to_subfield(cyclotomic_unit(F15), F15, F5) * e5.galois(2) == e5);
  auto F9 = AbelianField::cyclotomic(9), F3 = AbelianField::cyclotomic(3);
  CHECK(norm_to_subfield(cyclotomic_unit(F9), F9, F3) == cyclotomic_unit(F3));
  CycloElement x = cyclotomic_unit(F15);
  CHECK(norm_to_subfield(x, F15, F15) == x);
}

TEST_CASE("verify_norm_relations up to 20") {
  auto rep = verify_norm_relations(20);
  CHECK(rep.size() > 30);
  bool saw_12_4 = false;
  for (const auto& r : rep) {
    CHECK(r.relation_ok);
    CHECK(r.absolute_norm_ok);
    if (r.F == AbelianField::cyclotomic(12) && r.Fp == AbelianField::cyclotomic(4)) {
      saw_12_4 = true;
      CHECK(r.primes == std::vector<i64>{3});
    }
    if (r.F == r.Fp) CHECK(r.primes.empty());
  }
  CHECK(saw_12_4);
}

TEST_CASE("norm transitivity on random elements") {
  std::mt19937_64 rng(3);
  auto F = AbelianField::cyclotomic(15), Fp = AbelianField::cyclotomic(5), Fpp = AbelianField::quadratic(5);
  for (int t = 0; t < 100; ++t) {
    CycloElement x = random_element(15, rng);
    if (x.is_zero()) continue;
    CHECK(norm_to_subfield(x, F, Fpp) == norm_to_subfield(norm_to_subfield(x, F, Fp), Fp, Fpp));
  }
}

TEST_CASE("epsilon coherence up the tower over Q") {
  for (i64 p : {3, 5}) {
    for (int m = 1; m <= 2; ++m) {
      auto Km = AbelianField::cyclotomic(ipow(p, m + 1));
      CycloElement em = eps_n(make_tower(AbelianField::rationals(), p, m)).expand();
      for (int n = 0; n < m; ++n) {
        auto Kn = AbelianField::cyclotomic(ipow(p, n + 1));
        CycloElement en = eps_n(make_tower(AbelianField::rationals(), p, n)).expand();
        CHECK(norm_to_subfield(em, Km, Kn) == en);
      }
    }
  }
}
