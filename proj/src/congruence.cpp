#include "qcong/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <thread>

#include "qcong/counting.hpp"
#include "qcong/number_theory.hpp"
#include "qcong/qfunctions.hpp"

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;

struct FamilyEntry {
  Family family;
  const char* name;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::thm3_1_i, "thm3.1.i"},     {Family::thm3_1_q1, "thm3.1.q1"},
    {Family::thm3_1_ii, "thm3.1.ii"},   {Family::thm3_2_i, "thm3.2.i"},
    {Family::thm3_2_ii, "thm3.2.ii"},   {Family::thm3_3_i, "thm3.3.i"},
    {Family::thm3_3_ii, "thm3.3.ii"},   {Family::thm3_3_iii, "thm3.3.iii"},
    {Family::thm3_4_i, "thm3.4.i"},     {Family::thm3_4_ii, "thm3.4.ii"},
    {Family::thm3_5_i, "thm3.5.i"},     {Family::thm3_5_ii, "thm3.5.ii"},
    {Family::thm3_6_i, "thm3.6.i"},     {Family::thm3_6_ii, "thm3.6.ii"},
    {Family::thm3_7_i, "thm3.7.i"},     {Family::thm3_7_ii, "thm3.7.ii"},
    {Family::thm3_7_iii, "thm3.7.iii"}, {Family::thm3_8_i, "thm3.8.i"},
    {Family::thm3_8_ii, "thm3.8.ii"},
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::size_t to_size(const mpz_class& v, const std::string& what) {
  if (v < 0 || !v.fits_ulong_p()) throw ArgumentError(what + " does not fit in a machine word");
  return v.get_ui();
}

mpz_class power(std::uint64_t base, unsigned exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

// numerator / divisor, refusing a fractional result.
std::size_t exact_quotient(const mpz_class& numerator, unsigned long divisor,
                           const std::string& formula) {
  if (numerator % divisor != 0) {
    throw IntegralityError("offset " + formula + " = " + numerator.get_str() + "/" +
                           std::to_string(divisor) + " is not an integer");
  }
  return to_size(numerator / divisor, "offset " + formula);
}

struct Hypothesis {
  std::uint64_t min_p;
  std::int64_t legendre_arg;
};

std::optional<Hypothesis> hypothesis(Family f) {
  switch (f) {
    case Family::thm3_1_q1:
    case Family::thm3_1_ii:
      return Hypothesis{13, -6};
    case Family::thm3_4_i:
    case Family::thm3_4_ii:
      return Hypothesis{3, -1};
    case Family::thm3_7_i:
    case Family::thm3_7_ii:
      return Hypothesis{5, -3};
    default:
      return std::nullopt;
  }
}

std::string rhs_text(Rhs rhs, unsigned ell) {
  switch (rhs) {
    case Rhs::zero:
      return "0";
    case Rhs::two_f1_psi_q2:
      return "2 f1 psi(q^2)";
    case Rhs::two_psi_psi4:
      return "2 psi(q) psi(q^4)";
    case Rhs::two_f1_psi:
      return "2 f1 psi(q)";
    case Rhs::self:
      return "R*_" + std::to_string(ell) + "(n)";
    case Rhs::p_convolution:
      return "sum_v p(n - v(v+1)/2)";
    case Rhs::overpartition_conv:
      return "pbar(n)";
    case Rhs::d2:
      return "D2(n)";
    case Rhs::expression:
      return "expression";
  }
  return "?";
}

std::string progression_text(const Progression& pr) {
  if (pr.step == 1 && pr.offset == 0) return "n";
  std::string s = std::to_string(pr.step) + "n";
  if (pr.offset != 0) s += "+" + std::to_string(pr.offset);
  return s;
}

void finish_label(CongruenceClaim& c) {
  if (c.rhs != Rhs::expression) c.rhs_description = rhs_text(c.rhs, c.ell);
  if (c.rhs_sign < 0) c.rhs_description = "-" + c.rhs_description;
  const std::string r = "R*_" + std::to_string(c.ell);
  const std::string term = r + "(" + progression_text(c.progression) + ")";
  std::string lhs;
  switch (c.rhs) {
    case Rhs::zero:
    case Rhs::self:
      lhs = term;
      break;
    case Rhs::p_convolution:
      lhs = term + "/2";
      break;
    case Rhs::overpartition_conv:
      lhs = r + "(n) + sum_{v>=1} " + r + "(n-" + std::to_string(c.ell) + "v) p(v)";
      break;
    case Rhs::d2:
      lhs = r + "(n)";
      break;
    default:
      lhs = "sum " + term + " q^n";
  }
  c.label = lhs + (c.modulus ? " == " : " = ") + c.rhs_description;
  if (c.modulus) c.label += " (mod " + std::to_string(*c.modulus) + ")";
}

CongruenceClaim make_claim(Family f, unsigned ell, Progression pr, std::optional<Modulus> m,
                           Rhs rhs, std::vector<std::pair<std::string, long>> params) {
  CongruenceClaim c;
  c.family = f;
  c.ell = ell;
  c.source = rstar_quotient(ell);
  c.progression = pr;
  c.modulus = m;
  c.rhs = rhs;
  c.params.emplace_back("ell", static_cast<long>(ell));
  for (auto& p : params) c.params.push_back(std::move(p));
  finish_label(c);
  return c;
}

// The p-adic families: generating function along step * p^{2a} n + offset
// (part (i)) and vanishing along step * p^{2a+1} (p n + r) + offset' (part (ii)).
struct PrimeFamily {
  unsigned ell;
  unsigned step;       // 4, 2, 8
  unsigned numerator;  // offset = (numerator * p^{2a} - 1) / divisor
  unsigned divisor;
  Modulus modulus;
  Rhs rhs;
};

PrimeFamily prime_family(Family f) {
  switch (f) {
    case Family::thm3_1_q1:
    case Family::thm3_1_ii:
      return {4, 4, 7, 6, 4, Rhs::two_f1_psi_q2};
    case Family::thm3_4_i:
    case Family::thm3_4_ii:
      return {6, 2, 5, 4, 3, Rhs::two_psi_psi4};
    default:
      return {8, 8, 4, 3, 8, Rhs::two_f1_psi};
  }
}

std::string offset_formula(const PrimeFamily& pf, unsigned two_a) {
  return "(" + std::to_string(pf.numerator) + "p^" + std::to_string(two_a) + "-1)/" +
         std::to_string(pf.divisor);
}

std::vector<CongruenceClaim> prime_claims(Family f, const FamilyParams& params, bool vanishing) {
  check_eligibility(f, params.p);
  const PrimeFamily pf = prime_family(f);
  const std::uint64_t p = params.p;
  const unsigned a = params.alpha;
  std::vector<CongruenceClaim> out;
  if (!vanishing) {
    const mpz_class p2a = power(p, 2 * a);
    const std::size_t offset =
        exact_quotient(pf.numerator * p2a - 1, pf.divisor, offset_formula(pf, 2 * a));
    const std::size_t step = to_size(pf.step * p2a, "step");
    std::vector<std::pair<std::string, long>> ps{{"p", static_cast<long>(p)},
                                                 {"alpha", static_cast<long>(a)}};
    int sign = 1;
    if (f == Family::thm3_7_i && params.rhs_sign == RhsSign::dissection) {
      // Each induction step picks up (-1)^{k*} from the isolated f_{p^2} term.
      const long p6 = static_cast<long>(p % 6);
      const long kstar = p6 == 1 ? (static_cast<long>(p) - 1) / 6 : (-static_cast<long>(p) - 1) / 6;
      sign = (a % 2 == 1 && kstar % 2 != 0) ? -1 : 1;
      ps.emplace_back("rhs_sign", sign);
    }
    out.push_back(make_claim(f, pf.ell, {step, offset}, pf.modulus, pf.rhs, ps));
    if (sign < 0) {
      out.back().rhs_sign = -1;
      finish_label(out.back());
    }
    return out;
  }
  const mpz_class p2a1 = power(p, 2 * a + 1);
  const mpz_class p2a2 = power(p, 2 * a + 2);
  const std::size_t base =
      exact_quotient(pf.numerator * p2a2 - 1, pf.divisor, offset_formula(pf, 2 * a + 2));
  const std::size_t step = to_size(pf.step * p2a2, "step");
  for (std::uint64_t r = 1; r < p; ++r) {
    const std::size_t offset = to_size(pf.step * p2a1 * r + base, "offset");
    out.push_back(make_claim(f, pf.ell, {step, offset}, pf.modulus, Rhs::zero,
                             {{"p", static_cast<long>(p)},
                              {"alpha", static_cast<long>(a)},
                              {"r", static_cast<long>(r)}}));
  }
  return out;
}

std::vector<CongruenceClaim> fixed_claims(Family f, unsigned ell, std::size_t step,
                                          std::vector<std::size_t> offsets_by_xi,
                                          std::size_t first_xi, Modulus m,
                                          std::vector<std::pair<std::string, long>> extra = {}) {
  std::vector<CongruenceClaim> out;
  for (std::size_t i = 0; i < offsets_by_xi.size(); ++i) {
    auto params = extra;
    params.emplace_back("xi", static_cast<long>(first_xi + i));
    out.push_back(make_claim(f, ell, {step, offsets_by_xi[i]}, m, Rhs::zero, std::move(params)));
  }
  return out;
}

std::vector<CongruenceClaim> thm3_3(Family f, const FamilyParams& params) {
  const unsigned a = params.alpha;
  const mpz_class nine_a = power(9, a);
  std::vector<std::pair<std::string, long>> ps{{"alpha", static_cast<long>(a)}};
  if (f == Family::thm3_3_i) {
    const unsigned long d = params.offset_variant == OffsetVariant::statement ? 4 : 2;
    ps.emplace_back("offset_divisor", static_cast<long>(d));
    const std::size_t offset =
        exact_quotient(nine_a - 1, d, "(9^" + std::to_string(a) + "-1)/" + std::to_string(d));
    return {make_claim(f, 6, {to_size(nine_a, "step"), offset}, 3, Rhs::self, ps)};
  }
  const unsigned long c = f == Family::thm3_3_ii ? 21 : 33;
  const std::size_t offset = exact_quotient(
      c * nine_a - 1, 4, "(" + std::to_string(c) + "*9^" + std::to_string(a) + "-1)/4");
  return {make_claim(f, 6, {to_size(9 * nine_a, "step"), offset}, 3, Rhs::zero, ps)};
}

const std::vector<unsigned> kConvolutionElls{2, 3, 4, 5, 6, 8};

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> v;
    for (const auto& e : kFamilies) v.push_back(e.family);
    return v;
  }();
  return families;
}

std::string family_name(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e.name;
  }
  return "unknown";
}

Family family_from_name(std::string_view name) {
  const std::string n = lower(name);
  for (const auto& e : kFamilies) {
    if (n == e.name) return e.family;
  }
  throw ArgumentError("unknown theorem family '" + std::string(name) + "'");
}

std::vector<Family> families_matching(std::string_view selector) {
  const std::string s = lower(selector);
  if (s == "all") return all_families();
  std::vector<Family> out;
  for (const auto& e : kFamilies) {
    const std::string n = e.name;
    if (n == s || n.rfind(s + ".", 0) == 0) out.push_back(e.family);
  }
  if (out.empty()) throw ArgumentError("unknown theorem family '" + std::string(selector) + "'");
  return out;
}

std::size_t required_order(const Progression& pr, std::size_t terms) {
  if (pr.step == 0) throw ArgumentError("progression step must be positive");
  if (terms == 0) return 0;
  return pr.step * (terms - 1) + pr.offset + 1;
}

void check_eligibility(Family family, std::uint64_t p) {
  const auto h = hypothesis(family);
  if (!h) return;
  const std::string name = family_name(family);
  if (p < h->min_p) {
    throw EligibilityError(name + " requires p >= " + std::to_string(h->min_p) + ", got p=" +
                           std::to_string(p));
  }
  if (!is_prime(p)) throw EligibilityError(name + ": p=" + std::to_string(p) + " is not prime");
  const int symbol = legendre(h->legendre_arg, p);
  if (symbol != -1) {
    throw EligibilityError(name + " requires legendre(" + std::to_string(h->legendre_arg) + ", " +
                           std::to_string(p) + ") = -1, got " + std::to_string(symbol));
  }
}

std::vector<std::uint64_t> eligible_primes(Family family, std::uint64_t bound) {
  const auto h = hypothesis(family);
  if (!h) throw ArgumentError(family_name(family) + " has no prime parameter");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = h->min_p; p <= bound; ++p) {
    if (is_prime(p) && legendre(h->legendre_arg, p) == -1) out.push_back(p);
  }
  return out;
}

std::vector<CongruenceClaim> instantiate(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::thm3_1_i:
      return fixed_claims(family, 4, 4, {2, 3}, 2, 4);
    case Family::thm3_1_q1:
    case Family::thm3_4_i:
    case Family::thm3_7_i:
      return prime_claims(family, params, false);
    case Family::thm3_1_ii:
    case Family::thm3_4_ii:
    case Family::thm3_7_ii:
      return prime_claims(family, params, true);
    case Family::thm3_2_i:
    case Family::thm3_2_ii: {
      if (params.k == 0) throw ArgumentError("thm3.2 requires k >= 1");
      const unsigned ell = 5 * params.k;
      const std::vector<std::pair<std::string, long>> k{{"k", static_cast<long>(params.k)}};
      if (family == Family::thm3_2_i) return fixed_claims(family, ell, 5, {2, 3}, 2, 4, k);
      return {make_claim(family, ell, {5, 1}, 2, Rhs::zero, k)};
    }
    case Family::thm3_3_i:
    case Family::thm3_3_ii:
    case Family::thm3_3_iii:
      return thm3_3(family, params);
    case Family::thm3_5_i:
      return fixed_claims(family, 8, 4, {2, 3}, 2, 4);
    case Family::thm3_5_ii:
      return fixed_claims(family, 8, 16, {5, 9, 13}, 1, 4);
    case Family::thm3_6_i:
      return {make_claim(family, 8, {4, 3}, 8, Rhs::zero, {})};
    case Family::thm3_6_ii:
      return fixed_claims(family, 8, 8, {3, 5, 7}, 1, 8);
    case Family::thm3_7_iii: {
      std::vector<Modulus> moduli;
      if (params.modulus == 0) {
        moduli = {4, 2};
      } else if (params.modulus == 2 || params.modulus == 4) {
        moduli = {params.modulus};
      } else {
        throw ArgumentError("thm3.7.iii is checked mod 4 or mod 2, got " +
                            std::to_string(params.modulus));
      }
      std::vector<CongruenceClaim> out;
      for (const Modulus m : moduli) {
        auto c = make_claim(family, 8, {16, 1}, m, Rhs::p_convolution, {});
        c.halve = true;
        out.push_back(std::move(c));
      }
      return out;
    }
    case Family::thm3_8_i: {
      std::vector<unsigned> ells =
          params.ell == 0 ? kConvolutionElls : std::vector<unsigned>{params.ell};
      std::vector<CongruenceClaim> out;
      for (const unsigned ell : ells) {
        if (ell < 1) throw ArgumentError("thm3.8.i requires ell >= 1");
        out.push_back(make_claim(family, ell, {1, 0}, std::nullopt, Rhs::overpartition_conv, {}));
      }
      return out;
    }
    case Family::thm3_8_ii:
      return {make_claim(family, 2, {1, 0}, std::nullopt, Rhs::d2, {})};
  }
  throw ArgumentError("unknown theorem family");
}

std::shared_ptr<const Series> SeriesCache::get(const EtaQuotient& quotient,
                                               std::optional<Modulus> modulus, std::size_t order) {
  const auto key = std::make_pair(quotient.to_string(), modulus.value_or(0));
  std::promise<std::shared_ptr<const Series>> promise;
  std::unique_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it != entries_.end() && it->second.order >= order) {
    auto future = it->second.value;
    lock.unlock();
    return future.get();
  }
  entries_[key] = Entry{order, promise.get_future().share()};
  lock.unlock();
  try {
    auto value = std::make_shared<const Series>(eta_quotient(quotient, order, modulus));
    promise.set_value(value);
    return value;
  } catch (...) {
    promise.set_exception(std::current_exception());
    lock.lock();
    it = entries_.find(key);
    if (it != entries_.end() && it->second.order == order) entries_.erase(it);
    throw;
  }
}

namespace {

std::shared_ptr<const Series> source_series(const CongruenceClaim& claim,
                                            std::optional<Modulus> modulus, std::size_t order,
                                            const VerifyOptions& options) {
  if (options.cache) return options.cache->get(claim.source, modulus, order);
  return std::make_shared<const Series>(eta_quotient(claim.source, order, modulus));
}

Series build_rhs(const CongruenceClaim& claim, const Series& source, std::size_t terms,
                 std::optional<Modulus> m) {
  switch (claim.rhs) {
    case Rhs::zero:
      return Series::zero(terms, m);
    case Rhs::two_f1_psi_q2:
      return 2 * (euler_product(1, terms, m) * dilate(psi(terms, m), 2, terms));
    case Rhs::two_psi_psi4:
      return 2 * (psi(terms, m) * dilate(psi(terms, m), 4, terms));
    case Rhs::two_f1_psi:
      return 2 * (euler_product(1, terms, m) * psi(terms, m));
    case Rhs::self:
      return truncate(source, terms);
    case Rhs::p_convolution: {
      const auto p = counting::count({counting::Kind::plain, 0}, terms - 1).values;
      std::vector<mpz_class> c(terms);
      for (std::size_t n = 0; n < terms; ++n) {
        for (std::size_t v = 0; v * (v + 1) / 2 <= n; ++v) c[n] += p[n - v * (v + 1) / 2];
      }
      return Series::from_coefficients(std::move(c), m);
    }
    case Rhs::expression:
      if (!claim.rhs_builder) throw ArgumentError("claim has no right-hand side builder");
      return claim.rhs_builder(terms, m);
    default:
      break;
  }
  throw ArgumentError("right-hand side is not a series expression");
}

void compare(VerificationReport& report, const Series& lhs, const Series& rhs,
             const Progression& pr, std::optional<Modulus> m, std::size_t terms) {
  for (std::size_t n = 0; n < terms; ++n) {
    mpz_class a, b;
    if (m) {
      a = static_cast<unsigned long>(lhs.residue(n, *m));
      b = static_cast<unsigned long>(rhs.residue(n, *m));
    } else {
      a = lhs.coefficient(n);
      b = rhs.coefficient(n);
    }
    if (a != b) report.add_counterexample({n, pr.step * n + pr.offset, a, b});
  }
  report.terms_checked = terms;
}

// R*_l(n) + sum_{v>=1} R*_l(n - l v) p(v) against the overpartition oracle.
void verify_convolution(VerificationReport& report, const CongruenceClaim& claim,
                        std::size_t terms) {
  const Series r = eta_quotient(claim.source, terms);
  const auto p = counting::count({counting::Kind::plain, 0}, terms - 1).values;
  const auto pbar = counting::count({counting::Kind::overpartition, 0}, terms - 1).values;
  const std::size_t ell = claim.ell;
  for (std::size_t n = 0; n < terms; ++n) {
    mpz_class lhs = r.coefficient(n);
    for (std::size_t v = 1; ell * v <= n; ++v) lhs += r.coefficient(n - ell * v) * p[v];
    if (lhs != pbar[n]) report.add_counterexample({n, n, lhs, pbar[n]});
  }
  report.terms_checked = terms;
  report.notes.push_back("left side from the series engine and the p(n) oracle; right side from "
                         "the overpartition oracle");
}

void verify_d2(VerificationReport& report, const CongruenceClaim& claim, std::size_t terms) {
  const auto r = counting::count({counting::Kind::nonoverlined_regular, claim.ell}, terms - 1);
  const auto d = counting::count({counting::Kind::distinct_two_copies, 0}, terms - 1);
  for (std::size_t n = 0; n < terms; ++n) {
    if (r.values[n] != d.values[n]) report.add_counterexample({n, n, r.values[n], d.values[n]});
  }
  report.terms_checked = terms;
  report.notes.push_back("both sides from the counting oracles");
}

}  // namespace

VerificationReport verify(const CongruenceClaim& claim, std::size_t terms,
                          const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.family = family_name(claim.family);
  report.description = claim.label;
  report.params = claim.params;
  report.progression = std::make_pair(claim.progression.step, claim.progression.offset);
  report.modulus = claim.modulus;
  if (terms == 0) throw ArgumentError("verification needs at least one term");

  const std::size_t order = required_order(claim.progression, terms);
  if (order > options.max_order) {
    throw OrderShortfallError(claim.label + ": " + std::to_string(terms) + " terms need order " +
                              std::to_string(order) + ", above the limit " +
                              std::to_string(options.max_order));
  }

  if (claim.rhs == Rhs::overpartition_conv) {
    verify_convolution(report, claim, terms);
  } else if (claim.rhs == Rhs::d2) {
    verify_d2(report, claim, terms);
  } else {
    // R/2 == c (mod m) is checked as R == 2c (mod 2m), which also rejects odd R.
    std::optional<Modulus> m = claim.modulus;
    if (claim.halve) {
      if (!m) throw ArgumentError("halved claims need a modulus");
      m = 2 * *m;
      report.notes.push_back("checked as " + progression_text(claim.progression) +
                             " coefficients == 2 * right side (mod " + std::to_string(*m) + ")");
    }
    const auto source = source_series(claim, m, order, options);
    const Series lhs = truncate(
        extract_progression(*source, claim.progression.step, claim.progression.offset), terms);
    const Series base = claim.rhs == Rhs::self ? reduce_mod(*source, *m) : Series{};
    Series rhs = build_rhs(claim, base, terms, m);
    if (claim.rhs_sign != 1) rhs = claim.rhs_sign * rhs;
    if (claim.halve) rhs = 2 * rhs;
    compare(report, lhs, rhs, claim.progression, m, terms);
  }
  report.wall_time_us =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return report;
}

unsigned thread_budget() {
  if (const char* env = std::getenv("QCONG_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> verify_batch(
    const std::vector<std::pair<CongruenceClaim, std::size_t>>& claims,
    const VerifyOptions& options) {
  std::vector<VerificationReport> out(claims.size());
  std::vector<std::exception_ptr> errors(claims.size());
  SeriesCache local_cache;
  VerifyOptions opts = options;
  if (!opts.cache) opts.cache = &local_cache;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < claims.size(); i = next++) {
      try {
        out[i] = verify(claims[i].first, claims[i].second, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<std::size_t>(thread_budget(), std::max<std::size_t>(1, claims.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

namespace {

struct IntermediateEntry {
  IntermediateId id;
  const char* name;
};

constexpr IntermediateEntry kIntermediates[] = {
    {IntermediateId::r4_4n1_mod4, "r4_4n1_mod4"},   {IntermediateId::r6_2n1_mod3, "r6_2n1_mod3"},
    {IntermediateId::r6_3n2_mod3, "r6_3n2_mod3"},   {IntermediateId::r6_mod3, "r6_mod3"},
    {IntermediateId::r8_2n1_exact, "r8_2n1_exact"}, {IntermediateId::r8_2n1_mod8, "r8_2n1_mod8"},
    {IntermediateId::r8_4n1_mod4, "r8_4n1_mod4"},   {IntermediateId::r8_16n1_mod4, "r8_16n1_mod4"},
};

CongruenceClaim expression_claim(unsigned ell, Progression pr, std::optional<Modulus> m,
                                 std::string text, RhsBuilder builder) {
  CongruenceClaim c;
  c.ell = ell;
  c.source = rstar_quotient(ell);
  c.progression = pr;
  c.modulus = m;
  c.rhs = Rhs::expression;
  c.rhs_description = std::move(text);
  c.rhs_builder = std::move(builder);
  c.params.emplace_back("ell", static_cast<long>(ell));
  finish_label(c);
  return c;
}

Series two_eta(const EtaQuotient& q, std::size_t order, std::optional<Modulus> m) {
  return 2 * eta_quotient(q, order, m);
}

}  // namespace

const std::vector<IntermediateId>& all_intermediates() {
  static const std::vector<IntermediateId> ids = [] {
    std::vector<IntermediateId> v;
    for (const auto& e : kIntermediates) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string intermediate_name(IntermediateId id) {
  for (const auto& e : kIntermediates) {
    if (e.id == id) return e.name;
  }
  return "unknown";
}

IntermediateId intermediate_from_name(std::string_view name) {
  const std::string n = lower(name);
  for (const auto& e : kIntermediates) {
    if (n == e.name) return e.id;
  }
  throw ArgumentError("unknown intermediate congruence '" + std::string(name) + "'");
}

CongruenceClaim intermediate_claim(IntermediateId id) {
  CongruenceClaim c;
  switch (id) {
    case IntermediateId::r4_4n1_mod4:
      c = make_claim(Family::thm3_1_q1, 4, {4, 1}, 4, Rhs::two_f1_psi_q2, {});
      break;
    case IntermediateId::r6_2n1_mod3:
      c = make_claim(Family::thm3_4_i, 6, {2, 1}, 3, Rhs::two_psi_psi4, {});
      break;
    case IntermediateId::r6_3n2_mod3:
      c = expression_claim(6, {3, 2}, 3, "psi(q^3)^2", [](std::size_t n, auto m) {
        const Series s = dilate(psi(n, m), 3, n);
        return s * s;
      });
      break;
    case IntermediateId::r6_mod3:
      c = expression_claim(6, {1, 0}, 3, "psi(q)^2", [](std::size_t n, auto m) {
        return pow(psi(n, m), 2);
      });
      break;
    case IntermediateId::r8_2n1_exact:
      c = expression_claim(8, {2, 1}, std::nullopt, "2 f2^2 f8^2 / f1^4",
                           [](std::size_t n, auto m) {
                             return two_eta({{2, 2}, {8, 2}, {1, -4}}, n, m);
                           });
      break;
    case IntermediateId::r8_2n1_mod8:
      c = expression_claim(8, {2, 1}, 8, "2 f8^2",
                           [](std::size_t n, auto m) { return two_eta({{8, 2}}, n, m); });
      break;
    case IntermediateId::r8_4n1_mod4:
      c = expression_claim(8, {4, 1}, 4, "2 f4^2",
                           [](std::size_t n, auto m) { return two_eta({{4, 2}}, n, m); });
      break;
    case IntermediateId::r8_16n1_mod4:
      c = expression_claim(8, {16, 1}, 4, "2 f1^2",
                           [](std::size_t n, auto m) { return two_eta({{1, 2}}, n, m); });
      break;
  }
  c.label = intermediate_name(id) + ": " + c.label;
  return c;
}

VerificationReport verify_intermediate(IntermediateId id, std::size_t terms,
                                       const VerifyOptions& options) {
  const CongruenceClaim claim = intermediate_claim(id);
  VerificationReport report = verify(claim, terms, options);
  report.family = "intermediate." + intermediate_name(id);
  if (id == IntermediateId::r8_16n1_mod4) {
    // The same chain continues with 2 f1^2 == 2 f2^2 / f1^2 (mod 4).
    const Series a = two_eta({{1, 2}}, terms, 4);
    const Series b = two_eta({{2, 2}, {1, -2}}, terms, 4);
    const auto check = congruent_mod(a, b, 4, terms);
    if (check) {
      report.notes.push_back("2 f1^2 == 2 f2^2/f1^2 (mod 4) holds for " + std::to_string(terms) +
                             " terms");
    } else {
      const auto& mm = *check.first_mismatch;
      report.add_counterexample({mm.index, 16 * mm.index + 1,
                                 mpz_class(static_cast<unsigned long>(mm.lhs)),
                                 mpz_class(static_cast<unsigned long>(mm.rhs))});
      report.notes.push_back("2 f1^2 and 2 f2^2/f1^2 differ mod 4");
    }
  }
  return report;
}

}  // namespace qcong
