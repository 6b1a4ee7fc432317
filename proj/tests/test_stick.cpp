#include <cmath>

#include "doctest.h"
#include "iwasawa/stick.hpp"

using namespace iwasawa;

namespace {

Complex gauss_sum(const DirichletChar& chi, i64 r) {
  const long double pi = std::acos(-1.0L);
  Complex s = 0;
  for (i64 a = 1; a < r; ++a) s += chi.value(a) * std::polar(1.0L, 2 * pi * a / r);
  return s;
}

}  // namespace

TEST_CASE("theta both ways") {
  auto t3 = theta(3);
  CHECK(t3.matches_characters);
  CHECK(t3.value[0] == Rational(1, 6));
  CHECK(t3.value[1] == Rational(-1, 6));
  auto t4 = theta(4);
  CHECK(t4.value[0] == Rational(1, 4));
  CHECK(t4.value[1] == Rational(-1, 4));

  for (i64 r = 3; r <= 50; ++r) {
    auto t = theta(r);
    CHECK_MESSAGE(t.matches_characters, "r = " << r);
    // c theta = -theta
    CHECK(t.value.translate(t.value.group().conj()) == -t.value);
    CHECK(t.value.augmentation() == 0);
  }
  CHECK_THROWS_AS(theta(2), std::invalid_argument);
}

TEST_CASE("truncated L-values at 0") {
  // trivial character: the Euler factor at r kills zeta(0) = -1/2
  for (i64 r : {3, 4, 12})
    CHECK(truncated_L0(DirichletChar::trivial(r), r).is_zero());
  auto odd3 = dirichlet_characters(3)[1];
  CHECK(truncated_L0(odd3, 3).to_rational() == Rational(1, 3));
  // the conductor-3 character seen modulo 12 picks up (1 - chi(2)) = 2
  CHECK(truncated_L0(odd3.extend(12), 12).to_rational() == Rational(2, 3));
}

TEST_CASE("theta coherence in prime-power towers") {
  for (i64 p : {3, 5}) {
    auto hi = theta_sum_formula(p * p), lo = theta_sum_formula(p);
    auto m = make_quotient_map(hi.group_ptr(), lo.group_ptr());
    CHECK(push_forward(hi, m) == lo);
  }
}

TEST_CASE("gauss element") {
  auto g2 = gauss_element(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == CycloElement::from_rational(2, -1));
  auto g3 = gauss_element(3);
  CHECK(g3[0] == CycloElement::root_power(3, 1));
  CHECK(g3[1] == CycloElement::root_power(3, 2));

  auto g5 = gauss_element(5);
  const auto& G = g5.group();
  for (const auto& chi : dirichlet_characters(5)) {
    Complex s = 0;
    for (int g = 0; g < G.order(); ++g) s += chi.value(G.rep(g)) * g5[g].embed();
    CHECK(std::abs(s - gauss_sum(chi, 5)) < 1e-15L);
    if (!chi.is_trivial()) CHECK(std::fabs(std::abs(s) - std::sqrt(5.0L)) < 1e-15L);
  }
}

TEST_CASE("three ideals") {
  auto rep = three_ideal_lemma_check(3, 0);
  CHECK(rep.equal);
  CHECK(rep.equal_at_precision);
  // brute force over Z/9[G_0]: {a + b sigma_2 : a = b mod 3}
  const auto& L = rep.gen_ideal.truncate(2);
  for (i64 a = 0; a < 9; ++a)
    for (i64 b = 0; b < 9; ++b) {
      ZmodGR x = zmod_zero(L.group(), 9);
      x[0] = Zmod(a, 9);
      x[1] = Zmod(b, 9);
      CHECK(L.contains(x) == ((a - b) % 3 == 0));
    }
  for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 1}, {5, 0}, {5, 1}, {7, 0}, {3, 2}}) {
    auto r = three_ideal_lemma_check(p, n);
    CHECK(r.equal);
    CHECK(r.equal_at_precision);
    CHECK(r.mu_ideal.is_ideal());
    CHECK(r.int_ideal.is_ideal());
    // quotient Z_p / (u^{|G|} - 1) = Z/p^{n+1}
    CHECK(r.gen_ideal.log_index() == n + 1);
  }
  CHECK(chi_g_inf(3, 2) == 5);
}

TEST_CASE("Sn and the Stickelberger ideal") {
  auto s0 = fS_via_formula(3, 0, 4);
  CHECK(s0.theta_tilde_integral);
  CHECK(s0.principal);
  CHECK(s0.in_minus_part);
  CHECK(s0.index_in_minus == 0);
  // theta~_0 = (1 - sigma_2)/2 with g_inf = -4
  CHECK(s0.theta_tilde[0] == Zmod(invmod(2, 81), 81));
  CHECK(s0.theta_tilde[1] == Zmod(-invmod(2, 81), 81));
  CHECK(s0.fS.is_ideal());

  for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 1}, {5, 0}, {5, 1}, {7, 0}}) {
    const int M = n + 4;
    auto s = fS_via_formula(p, n, M);
    CHECK(s.theta_tilde_integral);
    CHECK(s.principal);
    CHECK(s.in_minus_part);
    CHECK(s.fS.is_ideal());
    // regular primes: p does not divide h^-
    CHECK(s.index_in_minus == 0);
    auto St = stickelberger_ideal(ipow(p, n + 1), p, M);
    CHECK(St.lattice() == s.fS.lattice());
    for (const auto& b : St.basis_mod()) CHECK(plus_part(b).is_zero());
  }
  CHECK(stickelberger_ideal(3, 3, 3).log_index() == 3);  // full minus part, rank 1
  CHECK_THROWS_AS(stickelberger_ideal(15, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(fS_via_formula(3, 1, 2), std::invalid_argument);
}
