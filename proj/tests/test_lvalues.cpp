#include <cmath>

#include "doctest.h"
#include "iwasawa/lvalues.hpp"
#include "iwasawa/stick.hpp"

using namespace iwasawa;

namespace {

const long double pi = std::acos(-1.0L);

DirichletChar find_char(i64 f, bool odd, i64 order) {
  for (const auto& chi : dirichlet_characters(f))
    if (chi.is_odd() == odd && chi.order() == order && chi.conductor() == f) return chi;
  throw std::logic_error("no such character");
}

}  // namespace

TEST_CASE("digamma and gauss sums") {
  CHECK(std::fabs(digamma(1) + 0.57721566490153286061L) < 1e-17L);
  CHECK(std::fabs(digamma(0.5L) + 0.57721566490153286061L + 2 * std::log(2.0L)) < 1e-17L);
  for (i64 f = 3; f <= 40; ++f)
    for (const auto& chi : dirichlet_characters(f))
      if (chi.conductor() == f) CHECK(std::fabs(std::abs(gauss_sum(chi)) - std::sqrt(static_cast<long double>(f))) < 1e-15L);
}

TEST_CASE("classical values at s = 1") {
  auto chi4 = find_char(4, true, 2), chi3 = find_char(3, true, 2), chi5 = find_char(5, false, 2);
  CHECK(std::abs(L1_functional_equation(chi4, {}) - Complex(pi / 4)) < 1e-17L);
  CHECK(std::abs(L1_functional_equation(chi3, {}) - Complex(pi / (3 * std::sqrt(3.0L)))) < 1e-17L);
  const long double l5 = 2 / std::sqrt(5.0L) * std::log((1 + std::sqrt(5.0L)) / 2);
  CHECK(std::abs(L1_functional_equation(chi5, {}) - Complex(l5)) < 1e-17L);
  CHECK(std::abs(L1_direct(chi5, {}) - Complex(l5)) < 1e-15L);
  // Euler factor at 3 for the conductor-4 character: chi(3) = -1
  CHECK(std::abs(L1_direct(chi4, {3}) - Complex(pi / 4 * (1 + 1.0L / 3))) < 1e-15L);
  CHECK_THROWS_AS(L_values(DirichletChar::trivial(5), {5}), std::invalid_argument);
}

TEST_CASE("values at s = 0") {
  auto chi3 = find_char(3, true, 2);
  CHECK(L0_value(chi3, {3}).to_rational() == Rational(1, 3));
  CHECK(L0_value(chi3, {2, 3}).to_rational() == Rational(2, 3));
  // agrees with the Stickelberger side
  for (i64 f : {5, 7, 12, 15})
    for (const auto& chi : dirichlet_characters(f))
      if (!chi.is_trivial()) CHECK(L0_value(chi, prime_factors(f)) == truncated_L0(chi, f));
  // even characters vanish at 0
  CHECK(L0_value(find_char(5, false, 2), {5}).is_zero());
}

TEST_CASE("two routes to L_S(1, chi) and non-vanishing") {
  for (i64 f = 3; f <= 40; ++f) {
    const auto S = prime_factors(f);
    for (const auto& chi : dirichlet_characters(f)) {
      if (chi.is_trivial()) continue;
      auto v = L_values(chi, S);
      if (f <= 24) CHECK_MESSAGE(v.discrepancy < 1e-10L, "f = " << f);
      // no Euler factor vanishes at s = 1, so L_S(1) != 0 iff L(1) != 0
      CHECK_MESSAGE(std::abs(v.L1) > 1e-3L, "f = " << f);
    }
  }
}

TEST_CASE("a^- from characters and from xi/(1 - xi)") {
  std::vector<AbelianField> fields;
  for (i64 m : {3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21}) fields.push_back(AbelianField::cyclotomic(m));
  for (i64 D : {-3, -4, -7, -8, -15, -20, -23, -24}) fields.push_back(AbelianField::quadratic(D));
  fields.push_back(make_tower(AbelianField::quadratic(5), 3, 0).field());
  fields.push_back(make_tower(AbelianField::quadratic(-4), 3, 1).field());
  for (const auto& F : fields) {
    auto r = a_minus(F);
    CHECK_MESSAGE(r.residual < 1e-12L, F.describe());
    CHECK(r.minus_part);
    auto plus = plus_part(r.characters);
    for (const auto& x : plus.coeffs()) CHECK(std::abs(x) < 1e-12L);
  }
  // Q(mu_3): a^- = (i/pi) L(1, chi_{-3}) (1 - sigma_2)/2
  auto a3 = a_minus_characters(AbelianField::cyclotomic(3));
  CHECK(std::abs(a3[0] - Complex(0, 1 / (6 * std::sqrt(3.0L)))) < 1e-17L);
  CHECK_THROWS_AS(a_minus(AbelianField::quadratic(5)), std::invalid_argument);
}

TEST_CASE("restriction along subfields of the same conductor") {
  for (i64 f : {7, 13, 15, 20, 21}) {
    auto top = a_minus_characters(AbelianField::cyclotomic(f));
    for (const auto& F : subfields(AbelianField::cyclotomic(f))) {
      if (F.is_real() || F.conductor() != f) continue;
      auto m = make_quotient_map(top.group_ptr(), F.galois_group());
      auto pushed = push_forward(top, m);
      auto direct = a_minus_characters(F);
      long double d = 0;
      for (int g = 0; g < pushed.size(); ++g) d = std::max(d, std::abs(pushed[g] - direct[g]));
      CHECK_MESSAGE(d < 1e-12L, F.describe());
    }
  }
}

TEST_CASE("equivariant functional equation") {
  for (i64 l : {3, 4, 5, 7, 9, 12, 15, 16, 20}) {
    auto r = equivariant_fe_check(l);
    CHECK_MESSAGE(r.residual < 1e-9L, "l = " << l);
  }
  CHECK_THROWS_AS(equivariant_fe_check(2), std::invalid_argument);
}

TEST_CASE("chi(cores A_r) for l = 12") {
  const i64 l = 12;
  auto G = FiniteAbelianGroup::units(l);
  for (i64 r : {2, 3, 4, 6, 12}) {
    CycloGR A = gauss_element(r);
    auto m = make_quotient_map(G, A.group_ptr());
    auto cA = corestriction(embed(A), m);
    for (const auto& chi : dirichlet_characters(l)) {
      const i64 f = chi.conductor();
      Complex expected = 0;
      // r = f prod_{q in T} q with T a set of primes dividing l but not f
      if (r % f == 0) {
        i64 rest = r / f;
        bool ok = true;
        Complex prod = 1;
        for (i64 q : prime_factors(rest)) {
          if (f % q == 0 || (rest / q) % q == 0) ok = false;
          prod *= -chi.primitive().value(q);
        }
        if (rest == 1) prod = 1;
        if (ok) expected = static_cast<long double>(euler_phi(l) / euler_phi(r)) * prod * gauss_sum(chi);
      }
      CHECK_MESSAGE(std::abs(evaluate(chi, cA) - expected) < 1e-14L, "r = " << r << " f = " << f);
    }
  }
}
