// qcong: expand, count and verify partition congruences from the command line.
//
// Exit status: 0 when every requested check passes, 1 when a verification
// fails, 2 for argument and eligibility errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcong/acceptance.hpp"
#include "qcong/congruence.hpp"
#include "qcong/counting.hpp"
#include "qcong/identities.hpp"
#include "qcong/qfunctions.hpp"
#include "qcong/search.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", c.output, "write to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw qcong::ArgumentError("cannot open output file '" + c.output + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string reports_json(const std::vector<qcong::VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(qcong::to_json(r));
  return dump(arr);
}

int status_of(const std::vector<qcong::VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.status != qcong::Status::pass) return kExitFail;
  }
  return 0;
}

struct ExpandArgs {
  Common common;
  std::string eta;
  unsigned ell = 0;
  std::size_t order = 500;
  qcong::Modulus modulus = 0;
  bool dense = false;
};

int run_expand(const ExpandArgs& a) {
  if (a.eta.empty() == (a.ell == 0)) {
    throw qcong::ArgumentError("give exactly one of --eta and --ell");
  }
  const auto quotient = a.ell ? qcong::rstar_quotient(a.ell) : qcong::EtaQuotient::parse(a.eta);
  std::optional<qcong::Modulus> m;
  if (a.modulus) m = a.modulus;
  const auto s = qcong::eta_quotient(quotient, a.order, m);
  if (a.common.format == "json") {
    emit(a.common, qcong::to_json(s) + "\n");
  } else {
    emit(a.common, qcong::to_text(s, !a.dense));
  }
  return 0;
}

struct CountArgs {
  Common common;
  std::string kind = "p";
  unsigned ell = 0;
  std::size_t upto = 20;
};

int run_count(const CountArgs& a) {
  const auto kind = qcong::counting::parse_kind(a.kind, a.ell);
  const auto table = qcong::counting::count(kind, a.upto);
  if (a.common.format == "json") {
    // Counts outgrow 64 bits quickly, so the array is written as raw decimal text.
    const auto values = qcong::Series::from_coefficients(table.values);
    emit(a.common, "{\"kind\": \"" + kind.name() + "\", \"upto\": " + std::to_string(a.upto) +
                       ", \"values\": " + qcong::to_json(values) + "}\n");
  } else {
    std::ostringstream out;
    for (std::size_t n = 0; n <= a.upto; ++n) out << n << ' ' << table.values[n].get_str() << '\n';
    emit(a.common, out.str());
  }
  return 0;
}

struct LemmaArgs {
  Common common;
  std::string id;
  bool all = false;
  long p = 0;
  long n = 0;
  std::size_t order = 0;
};

int run_lemma(const LemmaArgs& a) {
  std::vector<qcong::VerificationReport> reports;
  if (a.all) {
    for (const auto& inst : qcong::standard_identity_instances()) {
      reports.push_back(qcong::verify_identity(inst.id, inst.params,
                                               a.order ? a.order : inst.order));
    }
  } else {
    if (a.id.empty()) throw qcong::ArgumentError("give --id TAG or --all");
    const auto id = qcong::identity_from_tag(a.id);
    reports.push_back(qcong::verify_identity(id, {a.p, a.n}, a.order ? a.order : 500));
  }
  emit(a.common, a.common.format == "json" ? reports_json(reports) : qcong::render_table(reports));
  return status_of(reports);
}

struct TheoremArgs {
  Common common;
  std::string family;
  std::string intermediate;
  std::uint64_t p = 0;
  unsigned alpha = 0;
  unsigned k = 1;
  unsigned ell = 0;
  qcong::Modulus modulus = 0;
  std::string variant = "statement";
  std::string rhs_sign = "statement";
  std::size_t terms = 500;
  std::size_t max_order = 200000;
};

int run_theorem(const TheoremArgs& a) {
  qcong::VerifyOptions opts;
  opts.max_order = a.max_order;
  std::vector<qcong::VerificationReport> reports;
  if (!a.intermediate.empty()) {
    std::vector<qcong::IntermediateId> ids;
    if (a.intermediate == "all") {
      ids = qcong::all_intermediates();
    } else {
      ids.push_back(qcong::intermediate_from_name(a.intermediate));
    }
    qcong::SeriesCache cache;
    opts.cache = &cache;
    for (const auto id : ids) reports.push_back(qcong::verify_intermediate(id, a.terms, opts));
  } else {
    if (a.family.empty()) throw qcong::ArgumentError("give --family or --intermediate");
    std::vector<std::pair<qcong::CongruenceClaim, std::size_t>> claims;
    for (const auto f : qcong::families_matching(a.family)) {
      qcong::FamilyParams params;
      params.p = a.p;
      params.alpha = a.alpha;
      params.k = a.k;
      params.ell = a.ell;
      params.modulus = a.modulus;
      params.offset_variant =
          a.variant == "statement" ? qcong::OffsetVariant::statement : qcong::OffsetVariant::over_two;
      params.rhs_sign =
          a.rhs_sign == "statement" ? qcong::RhsSign::statement : qcong::RhsSign::dissection;
      if (params.p == 0) {
        try {
          const auto primes = qcong::eligible_primes(f, 100);
          params.p = primes.front();
        } catch (const qcong::ArgumentError&) {
          // family without a prime parameter
        }
      }
      for (auto& c : qcong::instantiate(f, params)) claims.emplace_back(std::move(c), a.terms);
    }
    reports = qcong::verify_batch(claims, opts);
  }
  emit(a.common, a.common.format == "json" ? reports_json(reports) : qcong::render_table(reports));
  return status_of(reports);
}

struct AllArgs {
  Common common;
  std::vector<int> criteria;
};

int run_all(const AllArgs& a) {
  const auto results = qcong::run_acceptance(a.criteria);
  bool ok = true;
  if (a.common.format == "json") {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(qcong::to_json(r));
    emit(a.common, dump(arr));
  } else {
    std::ostringstream out;
    for (const auto& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.title << '\n';
      for (const auto& d : r.details) out << "      " << d << '\n';
      for (const auto& rep : r.reports) {
        if (!r.passed && !rep.passed()) {
          out << "      " << rep.family << " " << rep.description << ": " << to_string(rep.status)
              << '\n';
        }
      }
    }
    emit(a.common, out.str());
  }
  for (const auto& r : results) ok = ok && r.passed;
  return ok ? 0 : kExitFail;
}

struct SearchArgs {
  Common common;
  qcong::SearchOptions options;
  bool hide_implied = false;
};

int run_search(const SearchArgs& a) {
  auto found = qcong::search(a.options);
  if (a.hide_implied) {
    std::erase_if(found, [](const qcong::SearchCandidate& c) { return c.implied_by.has_value(); });
  }
  if (a.common.format == "json") {
    json arr = json::array();
    for (const auto& c : found) arr.push_back(qcong::to_json(c));
    emit(a.common, dump(arr));
  } else {
    emit(a.common, qcong::render_search(found));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated q-series expansion and partition congruence verification"};
  app.require_subcommand(1);

  ExpandArgs expand;
  auto* cmd_expand = app.add_subcommand("expand", "print coefficients of an eta quotient");
  add_common(cmd_expand, expand.common);
  cmd_expand->add_option("--eta", expand.eta, "factor list such as 2:1,4:1,1:-2");
  cmd_expand->add_option("--ell", expand.ell, "shorthand for f2 f_ell / f1^2");
  cmd_expand->add_option("--order,-N", expand.order, "number of coefficients")->capture_default_str();
  cmd_expand->add_option("--modulus", expand.modulus, "reduce coefficients mod m");
  cmd_expand->add_flag("--dense", expand.dense, "print zero coefficients too");

  CountArgs count;
  auto* cmd_count = app.add_subcommand("count", "print oracle partition counts");
  add_common(cmd_count, count.common);
  cmd_count->add_option("--kind", count.kind, "p, overpartition, regular, overlined, rstar, d2")
      ->capture_default_str();
  cmd_count->add_option("--ell", count.ell, "ell for the regular kinds");
  cmd_count->add_option("--upto", count.upto, "largest n")->capture_default_str();

  LemmaArgs lemma;
  auto* cmd_lemma = app.add_subcommand("verify-lemma", "check catalog identities");
  add_common(cmd_lemma, lemma.common);
  cmd_lemma->add_option("--id", lemma.id, "identity tag, e.g. F1SQ_2DISS");
  cmd_lemma->add_flag("--all", lemma.all, "run the whole catalog");
  cmd_lemma->add_option("--p", lemma.p, "prime parameter");
  cmd_lemma->add_option("--n", lemma.n, "n for PHI_NSQ");
  cmd_lemma->add_option("--order,-N", lemma.order, "series order (default per identity, 500 for --id)");

  TheoremArgs thm;
  auto* cmd_thm = app.add_subcommand("verify-theorem", "instantiate and verify a congruence family");
  add_common(cmd_thm, thm.common);
  cmd_thm->add_option("--family", thm.family, "thm3.5, thm3.7.ii, ... or all");
  cmd_thm->add_option("--intermediate", thm.intermediate, "intermediate congruence id, or all");
  cmd_thm->add_option("--p", thm.p, "prime (default: smallest eligible)");
  cmd_thm->add_option("--alpha", thm.alpha, "exponent alpha")->capture_default_str();
  cmd_thm->add_option("--k", thm.k, "thm3.2: ell = 5k")->capture_default_str();
  cmd_thm->add_option("--ell", thm.ell, "thm3.8.i: single ell (default 2,3,4,5,6,8)");
  cmd_thm->add_option("--modulus", thm.modulus, "thm3.7.iii: 2 or 4 (default both)");
  cmd_thm->add_option("--variant", thm.variant, "thm3.3.i offset: statement or over_two")
      ->check(CLI::IsMember({"statement", "over_two"}))
      ->capture_default_str();
  cmd_thm->add_option("--rhs-sign", thm.rhs_sign, "thm3.7.i right side: statement or dissection")
      ->check(CLI::IsMember({"statement", "dissection"}))
      ->capture_default_str();
  cmd_thm->add_option("--terms,-N", thm.terms, "progression terms per claim")->capture_default_str();
  cmd_thm->add_option("--max-order", thm.max_order, "refuse claims needing a longer series")
      ->capture_default_str();

  AllArgs all;
  auto* cmd_all = app.add_subcommand("verify-all", "run the acceptance suite");
  add_common(cmd_all, all.common);
  cmd_all->add_option("--criterion", all.criteria, "restrict to these criteria (1..12)");

  SearchArgs srch;
  auto* cmd_search = app.add_subcommand("search", "scan progressions for vanishing congruences");
  add_common(cmd_search, srch.common);
  cmd_search->add_option("--ell", srch.options.ell, "ell")->capture_default_str();
  cmd_search->add_option("--max-step", srch.options.max_step)->capture_default_str();
  cmd_search->add_option("--max-modulus", srch.options.max_modulus)->capture_default_str();
  cmd_search->add_option("--order,-N", srch.options.order, "coefficients scanned")
      ->capture_default_str();
  cmd_search->add_option("--min-support", srch.options.min_support)->capture_default_str();
  cmd_search->add_flag("--hide-implied", srch.hide_implied, "drop candidates implied by another");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_expand) return run_expand(expand);
    if (*cmd_count) return run_count(count);
    if (*cmd_lemma) return run_lemma(lemma);
    if (*cmd_thm) return run_theorem(thm);
    if (*cmd_all) return run_all(all);
    if (*cmd_search) return run_search(srch);
  } catch (const qcong::Error& e) {
    std::cerr << "qcong: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qcong: internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
