#include "qcong/identities.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>

#include "qcong/eta_quotient.hpp"
#include "qcong/number_theory.hpp"
#include "qcong/qfunctions.hpp"

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;

// coefficient * q^shift * eta quotient
struct EtaTerm {
  long coefficient;
  std::size_t shift;
  EtaQuotient quotient;
};

long triangular(long n) { return n * (n + 1) / 2; }

void compare_exact(VerificationReport& report, const Series& lhs, const Series& rhs,
                   std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i) {
    const mpz_class a = lhs.coefficient(i);
    const mpz_class b = rhs.coefficient(i);
    if (a != b) report.add_counterexample({i, i, a, b});
  }
  report.terms_checked = upto;
}

void compare_mod(VerificationReport& report, const Series& lhs, const Series& rhs, Modulus m,
                 std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i) {
    const auto a = lhs.residue(i, m);
    const auto b = rhs.residue(i, m);
    if (a != b) {
      report.add_counterexample({i, i, mpz_class(static_cast<unsigned long>(a)),
                                 mpz_class(static_cast<unsigned long>(b))});
    }
  }
  report.terms_checked = upto;
}

// Multiplies every term by the smallest eta product that removes all
// negative exponents, then expands and sums each side.
void verify_eta_identity(VerificationReport& report, const std::vector<EtaTerm>& lhs,
                         const std::vector<EtaTerm>& rhs, std::size_t order) {
  std::map<unsigned, long> denominator;
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& t : *side) {
      for (const auto& [h, e] : t.quotient.factors()) {
        if (e < 0) denominator[h] = std::max(denominator[h], -e);
      }
    }
  }
  std::vector<EtaQuotient::Factor> factors(denominator.begin(), denominator.end());
  const EtaQuotient clear(factors);
  auto expand = [&](const std::vector<EtaTerm>& side) {
    Series sum = Series::zero(order);
    for (const auto& t : side) {
      const Series body = eta_quotient(t.quotient * clear, order);
      sum = add(sum, scale(truncate(shift(body, t.shift), order), t.coefficient));
    }
    return sum;
  };
  if (!clear.empty()) report.notes.push_back("both sides multiplied by " + clear.to_string());
  compare_exact(report, expand(lhs), expand(rhs), order);
}

void require_prime(long p, bool odd, long at_least, const std::string& tag) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ArgumentError(tag + ": p=" + std::to_string(p) + " is not a prime");
  }
  if (odd && p == 2) throw ArgumentError(tag + ": p must be an odd prime");
  if (p < at_least) {
    throw ArgumentError(tag + ": needs a prime p >= " + std::to_string(at_least) + ", got " +
                        std::to_string(p));
  }
}

// psi(q) = sum_{j=0}^{(p-3)/2} q^{T(j)} F(q^{(p^2+(2j+1)p)/2}, q^{(p^2-(2j+1)p)/2})
//          + q^{(p^2-1)/8} psi(q^{p^2})
void verify_psi_p_dissection(VerificationReport& report, long p, std::size_t order) {
  require_prime(p, true, 3, "PSI_PDISSECT");
  Series rhs = Series::zero(order);
  for (long j = 0; j <= (p - 3) / 2; ++j) {
    const ThetaSpec spec{(p * p + (2 * j + 1) * p) / 2, (p * p - (2 * j + 1) * p) / 2, 1, 1};
    rhs = add(rhs, general_theta(spec, 1, order, {}, triangular(j)));
  }
  const auto p2 = static_cast<std::size_t>(p * p);
  const auto tail = static_cast<std::size_t>((p * p - 1) / 8);
  rhs = add(rhs, truncate(shift(dilate(psi(order), p2, order), tail), order));
  compare_exact(report, psi(order), rhs, order);

  // The j-terms must occupy residue classes mod p distinct from the tail's.
  const long forbidden = (p * p - 1) / 8 % p;
  for (long j = 0; j <= (p - 3) / 2; ++j) {
    const long r = triangular(j) % p;
    if (r == forbidden) {
      report.add_counterexample({static_cast<std::size_t>(j), 0, r, forbidden});
      report.notes.push_back("residue side condition fails at j=" + std::to_string(j));
    }
  }
  report.notes.push_back("residue side condition checked for j=0.." + std::to_string((p - 3) / 2));
}

// f1 = sum_{k != k*} (-1)^k q^{(3k^2+k)/2} F(-q^{(3p^2+(6k+1)p)/2}, -q^{(3p^2-(6k+1)p)/2})
//      + (-1)^{k*} q^{(p^2-1)/24} f_{p^2},   k* = (+-p - 1)/6
void verify_f1_p_dissection(VerificationReport& report, long p, std::size_t order) {
  require_prime(p, false, 5, "F1_PDISSECT");
  const long special = p % 6 == 1 ? (p - 1) / 6 : (-p - 1) / 6;
  Series rhs = Series::zero(order);
  for (long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
    if (k == special) continue;
    const ThetaSpec spec{(3 * p * p + (6 * k + 1) * p) / 2, (3 * p * p - (6 * k + 1) * p) / 2, -1,
                         -1};
    const Series term = general_theta(spec, 1, order, {}, (3 * k * k + k) / 2);
    rhs = k % 2 == 0 ? add(rhs, term) : sub(rhs, term);
  }
  const auto tail = static_cast<std::size_t>((p * p - 1) / 24);
  const Series last =
      truncate(shift(euler_product(static_cast<unsigned>(p * p), order), tail), order);
  rhs = special % 2 == 0 ? add(rhs, last) : sub(rhs, last);
  compare_exact(report, euler_product(1, order), rhs, order);

  const long forbidden = (p * p - 1) / 24 % p;
  for (long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
    if (k == special) continue;
    const long r = static_cast<long>(floor_mod((3 * k * k + k) / 2, static_cast<std::uint64_t>(p)));
    if (r == forbidden) {
      report.add_counterexample({static_cast<std::size_t>(k + (p - 1) / 2), 0, r, forbidden});
      report.notes.push_back("residue side condition fails at k=" + std::to_string(k));
    }
  }
  report.notes.push_back("branch k*=" + std::to_string(special) + " (p mod 6 = " +
                         std::to_string(p % 6) + "); residue side condition checked for k=" +
                         std::to_string(-(p - 1) / 2) + ".." + std::to_string((p - 1) / 2));
}

// phi(-q^4)^4 = phi(-q) [phi(q^4)^3 + 2q phi(q^4)^2 psi(q^8) + 4q^2 phi(q^4) psi(q^8)^2 + 8q^3 psi(q^8)^3]
void verify_inv_phi_neg_4(VerificationReport& report, std::size_t order) {
  const Series p4 = dilate(phi(order), 4, order);
  const Series s8 = dilate(psi(order), 8, order);
  const Series pn4 = dilate(phi_neg(order), 4, order);
  auto term = [&](long c, std::size_t k, const Series& body) {
    return scale(truncate(shift(body, k), order), c);
  };
  const Series bracket = pow(p4, 3) + term(2, 1, p4 * p4 * s8) + term(4, 2, p4 * s8 * s8) +
                         term(8, 3, s8 * s8 * s8);
  report.notes.push_back("compared phi(-q^4)^4 with phi(-q) * bracket");
  compare_exact(report, pow(pn4, 4), phi_neg(order) * bracket, order);
}

// (1/phi(q)) phi(q^5)^6 = phi(q^25) [bracket in phi(q^25), X(q^5), Y(q^5)]
void verify_inv_phi_5(VerificationReport& report, std::size_t order) {
  const Series p = dilate(phi(order), 25, order);
  const Series x = x_series(5, order);
  const Series y = y_series(5, order);
  struct Monomial {
    long c;
    std::size_t k;
    int pe, xe, ye;
  };
  static const Monomial bracket_terms[] = {
      {1, 0, 4, 0, 0},    {-2, 1, 3, 1, 0},   {4, 2, 2, 2, 0},   {-8, 3, 1, 3, 0},
      {16, 4, 0, 4, 0},   {-2, 4, 3, 0, 1},   {-12, 5, 2, 1, 1}, {16, 6, 1, 2, 1},
      {-16, 7, 0, 3, 1},  {4, 8, 2, 0, 2},    {16, 9, 1, 1, 2},  {16, 10, 0, 2, 2},
      {-8, 12, 1, 0, 3},  {-16, 13, 0, 1, 3}, {16, 16, 0, 0, 4},
  };
  Series bracket = Series::zero(order);
  for (const auto& t : bracket_terms) {
    const Series body = pow(p, t.pe) * pow(x, t.xe) * pow(y, t.ye);
    bracket = bracket + scale(truncate(shift(body, t.k), order), t.c);
  }
  const Series lhs = invert(phi(order)) * pow(dilate(phi(order), 5, order), 6);
  report.notes.push_back("compared phi(q^5)^6 / phi(q) with phi(q^25) * bracket");
  compare_exact(report, lhs, p * bracket, order);
}

// phi(q) = phi(q^{n^2}) + sum_{r=1}^{n-1} q^{r^2} F(q^{n(n-2r)}, q^{n(n+2r)})
void verify_phi_n_squared(VerificationReport& report, long n, std::size_t order) {
  if (n < 1) throw ArgumentError("PHI_NSQ: n must be positive");
  Series rhs = dilate(phi(order), static_cast<std::size_t>(n * n), order);
  for (long r = 1; r < n; ++r) {
    rhs = rhs + general_theta(ThetaSpec{n * (n - 2 * r), n * (n + 2 * r), 1, 1}, 1, order, {},
                              r * r);
  }
  compare_exact(report, phi(order), rhs, order);
}

// phi(q) = phi(q^4) + c q psi(q^8): expand c = 1 and c = 2 and record which matches.
void verify_phi_2_coefficient(VerificationReport& report, std::size_t order) {
  const Series lhs = phi(order);
  const Series p4 = dilate(phi(order), 4, order);
  const Series qs8 = truncate(shift(dilate(psi(order), 8, order), 1), order);
  std::vector<long> matching;
  for (long c : {1L, 2L}) {
    const Series candidate = p4 + scale(qs8, c);
    std::optional<std::size_t> differs;
    for (std::size_t i = 0; i < order && !differs; ++i) {
      if (lhs.coefficient(i) != candidate.coefficient(i)) differs = i;
    }
    if (!differs) {
      matching.push_back(c);
      report.notes.push_back("coefficient " + std::to_string(c) + ": matches to order " +
                             std::to_string(order));
    } else {
      report.notes.push_back("coefficient " + std::to_string(c) + ": differs first at q^" +
                             std::to_string(*differs) + " (" +
                             lhs.coefficient(*differs).get_str() + " vs " +
                             candidate.coefficient(*differs).get_str() + ")");
    }
  }
  report.terms_checked = order;
  if (matching.empty()) {
    report.add_counterexample({0, 0, 0, 0});
    report.notes.push_back("neither candidate matches");
  } else {
    report.params.emplace_back("matching_coefficient", matching.front());
  }
}

void verify_binomial(VerificationReport& report, long p, bool squared, std::size_t order) {
  require_prime(p, false, 2, squared ? "BINOM_P2" : "BINOM_P");
  const auto m = static_cast<Modulus>(squared ? p * p : p);
  report.modulus = m;
  const Series f1 = euler_product(1, order, m);
  const Series fp = euler_product(static_cast<unsigned>(p), order, m);
  if (squared) {
    compare_mod(report, pow(f1, p * p), pow(fp, p), m, order);
  } else {
    compare_mod(report, fp, pow(f1, p), m, order);
  }
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> catalog = {
      {IdentityId::psi_p_dissection, "PSI_PDISSECT",
       "psi(q) dissected by residue classes mod an odd prime p", IdentityParam::odd_prime},
      {IdentityId::f1_p_dissection, "F1_PDISSECT",
       "f1 dissected by residue classes mod a prime p >= 5", IdentityParam::prime_at_least_5},
      {IdentityId::f1_squared_2_dissection, "F1SQ_2DISS",
       "f1^2 = f2 f8^5/(f4^2 f16^2) - 2q f2 f16^2/f8", IdentityParam::none},
      {IdentityId::inv_f1_squared_2_dissection, "INV_F1SQ",
       "1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8)", IdentityParam::none},
      {IdentityId::inv_f1_fourth_2_dissection, "INV_F1_QUAD",
       "1/f1^4 = f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10", IdentityParam::none},
      {IdentityId::f1_fourth_2_dissection, "F1_QUAD",
       "f1^4 = f4^10/(f2^2 f8^4) - 4q f2^2 f8^4/f4^2", IdentityParam::none},
      {IdentityId::inv_phi_neg_4_dissection, "INV_PHINEG_4",
       "1/phi(-q) as a 4-dissection in phi(q^4), psi(q^8)", IdentityParam::none},
      {IdentityId::inv_phi_5_dissection, "INV_PHI_5",
       "1/phi(q) as a 5-dissection in phi(q^25), X(q^5), Y(q^5)", IdentityParam::none},
      {IdentityId::psi_3_dissection, "PSI_3DISS", "psi(q) = F(q^3, q^6) + q psi(q^9)",
       IdentityParam::none},
      {IdentityId::phi_n_squared_dissection, "PHI_NSQ",
       "phi(q) = phi(q^{n^2}) + sum_r q^{r^2} F(q^{n(n-2r)}, q^{n(n+2r)})",
       IdentityParam::positive_n},
      {IdentityId::phi_2_dissection_coefficient, "PHI_NSQ_N2",
       "phi(q) = phi(q^4) + c q psi(q^8): adjudicate c in {1, 2}", IdentityParam::none},
      {IdentityId::binomial_p, "BINOM_P", "f_p == f1^p (mod p)", IdentityParam::prime},
      {IdentityId::binomial_p_squared, "BINOM_P2", "f1^{p^2} == f_p^p (mod p^2)",
       IdentityParam::prime},
  };
  return catalog;
}

const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& info : identity_catalog()) {
    if (info.id == id) return info;
  }
  throw ArgumentError("unknown identity id");
}

IdentityId identity_from_tag(std::string_view tag) {
  std::string upper(tag);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& info : identity_catalog()) {
    if (info.tag == upper) return info.id;
  }
  throw ArgumentError("unknown identity tag '" + std::string(tag) + "'");
}

std::vector<IdentityInstance> standard_identity_instances() {
  std::vector<IdentityInstance> out;
  for (long p : {3, 5, 7, 11, 13}) out.push_back({IdentityId::psi_p_dissection, {p, 0}, 300});
  for (long p : {5, 7, 11, 13}) out.push_back({IdentityId::f1_p_dissection, {p, 0}, 300});
  out.push_back({IdentityId::f1_squared_2_dissection, {}, 1000});
  out.push_back({IdentityId::inv_f1_squared_2_dissection, {}, 1000});
  out.push_back({IdentityId::inv_f1_fourth_2_dissection, {}, 1000});
  out.push_back({IdentityId::f1_fourth_2_dissection, {}, 1000});
  out.push_back({IdentityId::inv_phi_neg_4_dissection, {}, 500});
  out.push_back({IdentityId::inv_phi_5_dissection, {}, 300});
  out.push_back({IdentityId::psi_3_dissection, {}, 1000});
  for (long n : {2, 3}) out.push_back({IdentityId::phi_n_squared_dissection, {0, n}, 1000});
  out.push_back({IdentityId::phi_2_dissection_coefficient, {}, 1000});
  for (long p : {2, 3, 5, 7}) out.push_back({IdentityId::binomial_p, {p, 0}, 500});
  for (long p : {2, 3, 5}) out.push_back({IdentityId::binomial_p_squared, {p, 0}, 300});
  return out;
}

VerificationReport verify_identity(IdentityId id, const IdentityParams& params,
                                   std::size_t order) {
  const auto start = Clock::now();
  const IdentityInfo& info = identity_info(id);
  VerificationReport report;
  report.family = info.tag;
  report.description = info.description;
  switch (info.param) {
    case IdentityParam::none:
      break;
    case IdentityParam::positive_n:
      report.params.emplace_back("n", params.n);
      break;
    default:
      report.params.emplace_back("p", params.p);
  }
  report.params.emplace_back("order", static_cast<long>(order));

  switch (id) {
    case IdentityId::psi_p_dissection:
      verify_psi_p_dissection(report, params.p, order);
      break;
    case IdentityId::f1_p_dissection:
      verify_f1_p_dissection(report, params.p, order);
      break;
    case IdentityId::f1_squared_2_dissection:
      verify_eta_identity(report, {{1, 0, {{1, 2}}}},
                          {{1, 0, {{2, 1}, {8, 5}, {4, -2}, {16, -2}}},
                           {-2, 1, {{2, 1}, {16, 2}, {8, -1}}}},
                          order);
      break;
    case IdentityId::inv_f1_squared_2_dissection:
      verify_eta_identity(report, {{1, 0, {{1, -2}}}},
                          {{1, 0, {{8, 5}, {2, -5}, {16, -2}}},
                           {2, 1, {{4, 2}, {16, 2}, {2, -5}, {8, -1}}}},
                          order);
      break;
    case IdentityId::inv_f1_fourth_2_dissection:
      verify_eta_identity(report, {{1, 0, {{1, -4}}}},
                          {{1, 0, {{4, 14}, {2, -14}, {8, -4}}}, {4, 1, {{4, 2}, {8, 4}, {2, -10}}}},
                          order);
      break;
    case IdentityId::f1_fourth_2_dissection:
      verify_eta_identity(report, {{1, 0, {{1, 4}}}},
                          {{1, 0, {{4, 10}, {2, -2}, {8, -4}}}, {-4, 1, {{2, 2}, {8, 4}, {4, -2}}}},
                          order);
      break;
    case IdentityId::inv_phi_neg_4_dissection:
      verify_inv_phi_neg_4(report, order);
      break;
    case IdentityId::inv_phi_5_dissection:
      verify_inv_phi_5(report, order);
      break;
    case IdentityId::psi_3_dissection: {
      const Series rhs = general_theta(ThetaSpec{3, 6, 1, 1}, 1, order) +
                         truncate(shift(dilate(psi(order), 9, order), 1), order);
      compare_exact(report, psi(order), rhs, order);
      break;
    }
    case IdentityId::phi_n_squared_dissection:
      verify_phi_n_squared(report, params.n, order);
      break;
    case IdentityId::phi_2_dissection_coefficient:
      verify_phi_2_coefficient(report, order);
      break;
    case IdentityId::binomial_p:
      verify_binomial(report, params.p, false, order);
      break;
    case IdentityId::binomial_p_squared:
      verify_binomial(report, params.p, true, order);
      break;
  }
  report.wall_time_us =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return report;
}

}  // namespace qcong
