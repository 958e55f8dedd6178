#include <doctest.h>

#include <string>

#include "qcong/counting.hpp"
#include "qcong/identities.hpp"
#include "qcong/qfunctions.hpp"

using namespace qcong;

namespace {

// q^shift times the sum over |n| <= 60 of sx^{n(n+1)/2} sy^{n(n-1)/2} q^{a n(n+1)/2 + b n(n-1)/2}, by brute force.
Series brute_theta(long a, long b, int sx, int sy, std::size_t order, long shift = 0) {
  std::vector<mpz_class> c(order);
  for (long n = -60; n <= 60; ++n) {
    const long tx = n * (n + 1) / 2, ty = n * (n - 1) / 2;
    const long e = a * tx + b * ty + shift;
    if (e < 0 || static_cast<std::size_t>(e) >= order) continue;
    int sign = 1;
    if (sx < 0 && tx % 2 != 0) sign = -sign;
    if (sy < 0 && ty % 2 != 0) sign = -sign;
    c[e] += sign;
  }
  return Series::from_coefficients(std::move(c));
}

Series sparse(std::size_t order, std::initializer_list<std::pair<std::size_t, long>> terms) {
  std::vector<mpz_class> c(order);
  for (const auto& [i, v] : terms) c[i] = v;
  return Series::from_coefficients(std::move(c));
}

}  // namespace

TEST_CASE("euler_product: examples") {
  CHECK(euler_product(1, 8) == sparse(8, {{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}}));
  CHECK(euler_product(2, 8) == sparse(8, {{0, 1}, {2, -1}, {4, -1}}));
  const auto p = invert(euler_product(1, 105));
  CHECK(p.coefficient(4) == 5);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(p.coefficient(5 * n + 4) % 5 == 0);
  CHECK(euler_product(3, 40, 7) == reduce_mod(euler_product(3, 40), 7));
  CHECK_THROWS_AS(euler_product(0, 5), ArgumentError);
}

TEST_CASE("eta_quotient: examples") {
  CHECK(eta_quotient({{2, 1}, {1, -2}}, 4) == Series::from_coefficients({1, 2, 4, 8}));
  CHECK(eta_quotient({{2, 1}, {2, 1}, {1, -2}}, 4).coefficient(3) == 6);
  CHECK(eta_quotient({}, 7) == Series::one(7));
  // Same result as the explicit mul/invert route.
  const std::size_t n = 120;
  const auto direct = euler_product(2, n) * euler_product(8, n) *
                      invert(euler_product(1, n) * euler_product(1, n));
  CHECK(eta_quotient(rstar_quotient(8), n) == direct);
  CHECK(eta_quotient(rstar_quotient(8), n, 8) == reduce_mod(direct, 8));
}

TEST_CASE("EtaQuotient normalization") {
  const EtaQuotient q{{2, 1}, {1, -2}, {2, 1}, {4, 3}, {4, -3}};
  CHECK(q.to_string() == "1:-2,2:2");
  CHECK(q == EtaQuotient::parse("2:2,1:-2"));
  CHECK(q.has_negative_exponent());
  CHECK(q * q.inverse() == EtaQuotient{});
  CHECK(rstar_quotient(2) == EtaQuotient::parse("2:2,1:-2"));
  CHECK_THROWS_AS(EtaQuotient::parse("0:1"), ArgumentError);
  CHECK_THROWS_AS(EtaQuotient::parse("2:"), ArgumentError);
  CHECK_THROWS_AS(EtaQuotient::parse("a:1"), ArgumentError);
}

TEST_CASE("phi, psi, phi_neg: examples") {
  CHECK(phi(10) == sparse(10, {{0, 1}, {1, 2}, {4, 2}, {9, 2}}));
  CHECK(psi(11) == sparse(11, {{0, 1}, {1, 1}, {3, 1}, {6, 1}, {10, 1}}));
  CHECK(phi(50) == eta_quotient({{2, 5}, {1, -2}, {4, -2}}, 50));
  CHECK(psi(500) == eta_quotient({{2, 2}, {1, -1}}, 500));
  CHECK(phi_neg(200) == eta_quotient({{1, 2}, {2, -1}}, 200));
  CHECK(phi_neg(200) == reflect(phi(200)));
}

TEST_CASE("general_theta: specializations") {
  for (std::size_t n : {1u, 10u, 137u, 500u}) {
    CHECK(general_theta({1, 1, 1, 1}, 1, n) == phi(n));
    CHECK(general_theta({1, 3, 1, 1}, 1, n) == psi(n));
    CHECK(general_theta({1, 2, -1, -1}, 1, n) == euler_product(1, n));
  }
  CHECK(general_theta({2, 7, -1, 1}, 1, 300) == brute_theta(2, 7, -1, 1, 300));
  CHECK(general_theta({5, 0, 1, -1}, 1, 300) == brute_theta(5, 0, 1, -1, 300));
  CHECK(general_theta({1, 2, -1, -1}, 3, 90) == euler_product(3, 90));
  CHECK_THROWS_AS(general_theta({0, 0, 1, 1}, 1, 10), ArgumentError);
  CHECK_THROWS_AS(general_theta({1, 1, 2, 1}, 1, 10), ArgumentError);
  // Signed exponents need a shift keeping every term a power series.
  // Here the exponents are n^2 - 4n >= -4.
  CHECK_THROWS_AS(general_theta({-3, 5, 1, 1}, 1, 50), ArgumentError);
  CHECK_THROWS_AS(general_theta({-3, 5, 1, 1}, 1, 50, {}, 3), ArgumentError);
  CHECK(general_theta({-3, 5, 1, 1}, 1, 50, {}, 4) == brute_theta(-3, 5, 1, 1, 50, 4));
}

TEST_CASE("x_series and y_series: examples") {
  CHECK(x_series(1, 10) == sparse(10, {{0, 1}, {3, 1}, {7, 1}}));
  CHECK(y_series(1, 10) == sparse(10, {{0, 1}, {1, 1}, {9, 1}}));
  CHECK(x_series(5, 40) == dilate(x_series(1, 8), 5));
  CHECK(y_series(5, 40) == dilate(y_series(1, 8), 5));
}

TEST_CASE("verify_identity: examples") {
  CHECK(verify_identity(IdentityId::f1_squared_2_dissection, {}, 200).passed());
  const auto psi3 = verify_identity(IdentityId::psi_p_dissection, {3, 0}, 200);
  CHECK(psi3.passed());
  CHECK(psi3.terms_checked == 200);
  CHECK(verify_identity(IdentityId::phi_n_squared_dissection, {0, 2}, 200).passed());

  const auto n2 = verify_identity(IdentityId::phi_2_dissection_coefficient, {}, 200);
  CHECK(n2.passed());
  bool recorded = false;
  for (const auto& [k, v] : n2.params) {
    if (k == "matching_coefficient") {
      recorded = true;
      CHECK(v == 2);
    }
  }
  CHECK(recorded);
}

TEST_CASE("verify_identity: parameter errors") {
  CHECK_THROWS_AS(verify_identity(IdentityId::psi_p_dissection, {2, 0}, 50), ArgumentError);
  CHECK_THROWS_AS(verify_identity(IdentityId::psi_p_dissection, {9, 0}, 50), ArgumentError);
  CHECK_THROWS_AS(verify_identity(IdentityId::f1_p_dissection, {3, 0}, 50), ArgumentError);
  CHECK_THROWS_AS(verify_identity(IdentityId::binomial_p, {4, 0}, 50), ArgumentError);
  CHECK_THROWS_AS(verify_identity(IdentityId::phi_n_squared_dissection, {0, 0}, 50), ArgumentError);
  CHECK_THROWS_AS(identity_from_tag("NOPE"), ArgumentError);
  CHECK(identity_from_tag("f1sq_2diss") == IdentityId::f1_squared_2_dissection);
}

TEST_CASE("identity catalog: every standard instance passes") {
  for (const auto& inst : standard_identity_instances()) {
    const auto r = verify_identity(inst.id, inst.params, inst.order);
    INFO(r.family << " p=" << inst.params.p << " n=" << inst.params.n);
    CHECK(r.passed());
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("lemma reconstructions at other orders and primes") {
  for (long p : {3, 5, 7, 11, 13, 17, 19}) {
    CHECK(verify_identity(IdentityId::psi_p_dissection, {p, 0}, 300).passed());
  }
  for (long p : {5, 7, 11, 13, 17}) {
    CHECK(verify_identity(IdentityId::f1_p_dissection, {p, 0}, 300).passed());
  }
  for (long n : {4, 5}) CHECK(verify_identity(IdentityId::phi_n_squared_dissection, {0, n}, 400).passed());
}

TEST_CASE("catalog tags are unique") {
  const auto& cat = identity_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(identity_info(cat[i].id).tag == cat[i].tag);
    for (std::size_t j = i + 1; j < cat.size(); ++j) CHECK(cat[i].tag != cat[j].tag);
  }
}
