#include "qcong/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "qcong/congruence.hpp"
#include "qcong/counting.hpp"
#include "qcong/identities.hpp"
#include "qcong/qfunctions.hpp"
#include "qcong/search.hpp"

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;
using counting::Kind;

SeriesCache& shared_cache() {
  static SeriesCache cache;
  return cache;
}

// Verifies every claim of each (family, params, terms) request and folds the
// reports into the criterion.
struct Batch {
  std::vector<std::pair<CongruenceClaim, std::size_t>> claims;

  void add(Family f, const FamilyParams& p, std::size_t terms) {
    for (auto& c : instantiate(f, p)) claims.emplace_back(std::move(c), terms);
  }

  std::vector<VerificationReport> run() {
    VerifyOptions opts;
    opts.cache = &shared_cache();
    return verify_batch(claims, opts);
  }
};

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed(); });
}

void absorb(CriterionResult& out, std::vector<VerificationReport> reports) {
  for (auto& r : reports) out.reports.push_back(std::move(r));
}

std::string summary(const VerificationReport& r) {
  std::string s = r.family + " " + r.description + ": " + to_string(r.status);
  if (!r.counterexamples.empty()) {
    const auto& c = r.counterexamples.front();
    s += " (first mismatch n=" + std::to_string(c.index) + ", found " + c.found.get_str() +
         ", expected " + c.expected.get_str() + ")";
  }
  return s;
}

VerificationReport oracle_report(const counting::PartitionKind& kind, const EtaQuotient& q,
                                 std::size_t upto) {
  VerificationReport r;
  r.family = "oracle." + kind.name();
  r.description = "count(" + kind.name() + ") vs eta quotient " + q.to_string();
  r.params.emplace_back("upto", static_cast<long>(upto));
  const auto start = Clock::now();
  const auto table = counting::count(kind, upto);
  const Series s = eta_quotient(q, upto + 1);
  for (std::size_t n = 0; n <= upto; ++n) {
    const mpz_class c = s.coefficient(n);
    if (c != table.values[n]) r.add_counterexample({n, n, c, table.values[n]});
  }
  r.terms_checked = upto + 1;
  r.wall_time_us =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return r;
}

CriterionResult criterion1() {
  CriterionResult out;
  const std::size_t upto = 300;
  for (const unsigned ell : {2u, 3u, 4u, 5u, 6u, 8u, 10u, 15u}) {
    const EtaQuotient two_ell{{2, 1}, {ell, 1}, {1, -2}};
    out.reports.push_back(oracle_report({Kind::nonoverlined_regular, ell}, two_ell, upto));
    out.reports.push_back(oracle_report({Kind::regular, ell}, {{ell, 1}, {1, -1}}, upto));
    out.reports.push_back(oracle_report({Kind::overlined_regular, ell},
                                        two_ell * EtaQuotient{{2 * ell, -1}}, upto));
  }
  out.reports.push_back(oracle_report({Kind::plain, 0}, {{1, -1}}, upto));
  out.reports.push_back(oracle_report({Kind::overpartition, 0}, {{2, 1}, {1, -2}}, upto));
  out.reports.push_back(oracle_report({Kind::distinct_two_copies, 0}, {{2, 2}, {1, -2}}, upto));
  out.passed = all_pass(out.reports);
  out.details.push_back(std::to_string(out.reports.size()) + " kind/quotient pairs compared for n <= " +
                        std::to_string(upto));
  return out;
}

CriterionResult criterion2() {
  CriterionResult out;
  out.passed = true;
  struct Anchor {
    counting::PartitionKind kind;
    EtaQuotient quotient;
    long expected;
  };
  const Anchor anchors[] = {
      {{Kind::overpartition, 0}, {{2, 1}, {1, -2}}, 8},
      {{Kind::nonoverlined_regular, 2}, rstar_quotient(2), 6},
      {{Kind::overlined_regular, 2}, {{2, 1}, {2, 1}, {1, -2}, {4, -1}}, 6},
  };
  for (const auto& a : anchors) {
    const mpz_class oracle = counting::count(a.kind, 3).values[3];
    const mpz_class series = eta_quotient(a.quotient, 4).coefficient(3);
    const bool ok = oracle == a.expected && series == a.expected;
    out.passed = out.passed && ok;
    out.details.push_back(a.kind.name() + "(3): oracle " + oracle.get_str() + ", series " +
                          series.get_str() + ", expected " + std::to_string(a.expected) +
                          (ok ? "" : "  MISMATCH"));
  }
  const std::size_t n_max = 300;
  struct Ramanujan {
    unsigned long step, offset;
  };
  const auto p = counting::count({Kind::plain, 0}, 11 * n_max + 6).values;
  for (const Ramanujan rc : {Ramanujan{5, 4}, Ramanujan{7, 5}, Ramanujan{11, 6}}) {
    VerificationReport r;
    r.family = "ramanujan";
    r.description = "p(" + std::to_string(rc.step) + "n+" + std::to_string(rc.offset) +
                    ") == 0 (mod " + std::to_string(rc.step) + ")";
    r.progression = std::make_pair(rc.step, rc.offset);
    r.modulus = rc.step;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto& v = p[rc.step * n + rc.offset];
      if (mpz_divisible_ui_p(v.get_mpz_t(), rc.step) == 0) {
        r.add_counterexample({n, rc.step * n + rc.offset, v, 0});
      }
    }
    r.terms_checked = n_max + 1;
    out.passed = out.passed && r.passed();
    out.reports.push_back(std::move(r));
  }
  return out;
}

CriterionResult criterion3() {
  CriterionResult out;
  for (const auto& inst : standard_identity_instances()) {
    auto r = verify_identity(inst.id, inst.params, inst.order);
    if (inst.id == IdentityId::phi_2_dissection_coefficient) {
      for (const auto& note : r.notes) out.details.push_back("PHI_NSQ_N2: " + note);
    }
    out.reports.push_back(std::move(r));
  }
  out.passed = all_pass(out.reports);
  return out;
}

CriterionResult criterion4() {
  CriterionResult out;
  Batch b;
  b.add(Family::thm3_1_i, {}, 2001);
  FamilyParams p;
  p.p = 13;
  b.add(Family::thm3_1_q1, p, 500);
  b.add(Family::thm3_1_ii, p, 11);
  absorb(out, b.run());
  out.passed = all_pass(out.reports);
  return out;
}

CriterionResult criterion5() {
  CriterionResult out;
  Batch b;
  for (unsigned k : {1u, 2u, 3u}) {
    FamilyParams p;
    p.k = k;
    b.add(Family::thm3_2_i, p, 2001);
    b.add(Family::thm3_2_ii, p, 2001);
  }
  absorb(out, b.run());
  out.passed = all_pass(out.reports);
  return out;
}

CriterionResult criterion6() {
  CriterionResult out;
  Batch gating;
  FamilyParams p;
  p.alpha = 1;
  gating.add(Family::thm3_3_i, p, 1001);
  p.alpha = 2;
  gating.add(Family::thm3_3_i, p, 201);
  for (unsigned a : {0u, 1u, 2u}) {
    p.alpha = a;
    gating.add(Family::thm3_3_ii, p, 201);
    gating.add(Family::thm3_3_iii, p, 201);
  }
  auto reports = gating.run();
  out.passed = all_pass(reports);
  absorb(out, std::move(reports));

  // The (9^a - 1)/2 offset is run for the record only.
  Batch variant;
  FamilyParams v;
  v.offset_variant = OffsetVariant::over_two;
  for (unsigned a : {1u, 2u}) {
    v.alpha = a;
    variant.add(Family::thm3_3_i, v, 201);
  }
  for (auto& r : variant.run()) {
    out.details.push_back("offset (9^a-1)/2 variant, " + summary(r));
    r.notes.push_back("offset variant (9^a-1)/2; recorded, not gating");
    out.reports.push_back(std::move(r));
  }
  return out;
}

CriterionResult criterion7() {
  CriterionResult out;
  Batch b;
  for (std::uint64_t prime : {3u, 7u}) {
    for (unsigned a : {0u, 1u}) {
      FamilyParams p;
      p.p = prime;
      p.alpha = a;
      b.add(Family::thm3_4_i, p, 500);
      b.add(Family::thm3_4_ii, p, 21);
    }
  }
  absorb(out, b.run());
  out.passed = all_pass(out.reports);
  return out;
}

CriterionResult criterion8() {
  CriterionResult out;
  Batch b;
  for (Family f : {Family::thm3_5_i, Family::thm3_5_ii, Family::thm3_6_i, Family::thm3_6_ii}) {
    b.add(f, {}, 2001);
  }
  absorb(out, b.run());
  out.passed = all_pass(out.reports);
  return out;
}

CriterionResult criterion9() {
  CriterionResult out;
  Batch b;
  FamilyParams p;
  p.p = 5;
  b.add(Family::thm3_7_i, p, 500);
  b.add(Family::thm3_7_ii, p, 51);
  p.alpha = 1;
  // At a = 1 the step is 5000; 21 terms keep the order near 10^5.
  b.add(Family::thm3_7_ii, p, 21);
  auto reports = b.run();
  out.passed = all_pass(reports);
  absorb(out, std::move(reports));

  // (i) beyond a = 0, as printed and with the sign carried by the f1 dissection.
  Batch beyond;
  beyond.add(Family::thm3_7_i, p, 500);
  p.rhs_sign = RhsSign::dissection;
  beyond.add(Family::thm3_7_i, p, 500);
  for (auto& r : beyond.run()) {
    out.details.push_back("(i) alpha=1 (recorded): " + summary(r));
    r.notes.push_back("alpha=1 outcome recorded, not gating");
    out.reports.push_back(std::move(r));
  }

  FamilyParams iii;
  iii.modulus = 2;
  Batch mod2;
  mod2.add(Family::thm3_7_iii, iii, 500);
  auto r2 = mod2.run();
  out.passed = out.passed && all_pass(r2);
  for (const auto& r : r2) out.details.push_back("(iii) mod 2 (gating): " + summary(r));
  absorb(out, std::move(r2));

  iii.modulus = 4;
  Batch mod4;
  mod4.add(Family::thm3_7_iii, iii, 500);
  for (auto& r : mod4.run()) {
    out.details.push_back("(iii) mod 4 (recorded): " + summary(r));
    r.notes.push_back("mod 4 outcome recorded, not gating");
    out.reports.push_back(std::move(r));
  }
  return out;
}

CriterionResult criterion10() {
  CriterionResult out;
  Batch b;
  b.add(Family::thm3_8_i, {}, 1001);
  b.add(Family::thm3_8_ii, {}, 1001);
  absorb(out, b.run());
  out.passed = all_pass(out.reports);
  return out;
}

CriterionResult criterion11() {
  CriterionResult out;
  VerifyOptions opts;
  opts.cache = &shared_cache();
  for (const auto id : all_intermediates()) out.reports.push_back(verify_intermediate(id, 300, opts));
  out.passed = all_pass(out.reports);
  return out;
}

CriterionResult criterion12() {
  CriterionResult out;
  out.passed = true;
  for (const unsigned ell : {4u, 8u}) {
    SearchOptions opts;
    opts.ell = ell;
    opts.max_step = ell;
    opts.max_modulus = ell;
    opts.order = 500;
    const auto found = search(opts);

    // Every fixed progression of the theorems inside the search window.
    std::vector<std::pair<Progression, Modulus>> expected;
    for (Family f : {Family::thm3_1_i, Family::thm3_5_i, Family::thm3_5_ii, Family::thm3_6_i,
                     Family::thm3_6_ii}) {
      for (const auto& c : instantiate(f, {})) {
        if (c.ell == ell && c.progression.step <= opts.max_step && *c.modulus <= opts.max_modulus) {
          expected.emplace_back(c.progression, *c.modulus);
        }
      }
    }
    std::size_t unlabeled = 0;
    for (const auto& c : found) {
      if (c.rediscovers.empty() && !c.implied_by) ++unlabeled;
    }
    for (const auto& [pr, m] : expected) {
      const bool hit = std::any_of(found.begin(), found.end(), [&](const SearchCandidate& c) {
        return c.progression == pr && c.modulus == m && !c.rediscovers.empty();
      });
      out.passed = out.passed && hit;
      out.details.push_back("ell=" + std::to_string(ell) + ": " + std::to_string(pr.step) + "n+" +
                            std::to_string(pr.offset) + " mod " + std::to_string(m) +
                            (hit ? " rediscovered" : " MISSING"));
    }
    out.details.push_back("ell=" + std::to_string(ell) + ": " + std::to_string(found.size()) +
                          " candidates, " + std::to_string(unlabeled) +
                          " neither labeled nor implied");
  }
  return out;
}

const char* const kTitles[kCriterionCount] = {
    "oracle-series equivalence",
    "counting anchors and Ramanujan congruences",
    "identity catalog",
    "R*_4 congruences",
    "R*_{5k} congruences",
    "R*_6 internal congruence and vanishing",
    "R*_6 prime family",
    "R*_8 fixed progressions",
    "R*_8 prime family and p-convolution",
    "exact identities",
    "intermediate congruences",
    "search rediscovery",
};

}  // namespace

CriterionResult run_criterion(int number) {
  using Fn = CriterionResult (*)();
  static constexpr Fn kRunners[kCriterionCount] = {
      criterion1, criterion2, criterion3,  criterion4,  criterion5,  criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11, criterion12,
  };
  if (number < 1 || number > kCriterionCount) {
    throw ArgumentError("acceptance criterion must be in 1.." + std::to_string(kCriterionCount));
  }
  const auto start = Clock::now();
  CriterionResult r = kRunners[number - 1]();
  r.number = number;
  r.title = kTitles[number - 1];
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& selection) {
  std::vector<int> numbers = selection;
  if (numbers.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) numbers.push_back(i);
  }
  std::sort(numbers.begin(), numbers.end());
  numbers.erase(std::unique(numbers.begin(), numbers.end()), numbers.end());
  std::vector<CriterionResult> out;
  for (int n : numbers) out.push_back(run_criterion(n));
  return out;
}

nlohmann::ordered_json to_json(const CriterionResult& r) {
  nlohmann::ordered_json j;
  j["criterion"] = r.number;
  j["title"] = r.title;
  j["passed"] = r.passed;
  j["details"] = r.details;
  auto reports = nlohmann::ordered_json::array();
  for (const auto& rep : r.reports) reports.push_back(to_json(rep));
  j["reports"] = reports;
  return j;
}

}  // namespace qcong
