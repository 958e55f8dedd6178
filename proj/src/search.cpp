#include "qcong/search.hpp"

#include <algorithm>
#include <sstream>

#include "qcong/qfunctions.hpp"

namespace qcong {

namespace {

// Fixed-progression families that take no prime parameter.
std::vector<CongruenceClaim> known_claims(unsigned ell) {
  std::vector<CongruenceClaim> out;
  auto append = [&](Family f, const FamilyParams& p) {
    for (auto& c : instantiate(f, p)) {
      if (c.ell == ell && c.rhs == Rhs::zero) out.push_back(std::move(c));
    }
  };
  for (const Family f : {Family::thm3_1_i, Family::thm3_5_i, Family::thm3_5_ii, Family::thm3_6_i,
                         Family::thm3_6_ii}) {
    append(f, {});
  }
  if (ell % 5 == 0) {
    FamilyParams p;
    p.k = ell / 5;
    append(Family::thm3_2_i, p);
    append(Family::thm3_2_ii, p);
  }
  if (ell == 6) {
    for (unsigned a = 0; a <= 2; ++a) {
      FamilyParams p;
      p.alpha = a;
      append(Family::thm3_3_ii, p);
      append(Family::thm3_3_iii, p);
    }
  }
  return out;
}

std::string claim_tag(const CongruenceClaim& c) {
  std::string tag = family_name(c.family);
  for (const auto& [k, v] : c.params) {
    if (k != "ell") tag += " " + k + "=" + std::to_string(v);
  }
  return tag;
}

// (a, b, m) follows from (a', b', m') when a' | a, b == b' (mod a') and m | m'.
bool implies(const SearchCandidate& coarse, const SearchCandidate& fine) {
  const auto& c = coarse.progression;
  const auto& f = fine.progression;
  if (c == f && coarse.modulus == fine.modulus) return false;
  return f.step % c.step == 0 && f.offset % c.step == c.offset &&
         coarse.modulus % fine.modulus == 0;
}

}  // namespace

std::vector<SearchCandidate> search(const SearchOptions& options) {
  if (options.ell == 0) throw ArgumentError("search needs ell >= 1");
  if (options.max_step == 0) throw ArgumentError("search needs max_step >= 1");
  const Series r = eta_quotient(rstar_quotient(options.ell), options.order);
  const auto coeffs = r.exact_coefficients();
  const auto known = known_claims(options.ell);

  std::vector<SearchCandidate> out;
  for (std::size_t a = 1; a <= options.max_step; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (b >= options.order) continue;
      const std::size_t support = (options.order - b + a - 1) / a;
      if (support < options.min_support) continue;
      for (Modulus m = 2; m <= options.max_modulus; ++m) {
        bool holds = true;
        for (std::size_t i = b; i < options.order && holds; i += a) {
          holds = mpz_divisible_ui_p(coeffs[i].get_mpz_t(), m) != 0;
        }
        if (!holds) continue;
        SearchCandidate c;
        c.progression = {a, b};
        c.modulus = m;
        c.evidence = support;
        for (const auto& k : known) {
          if (k.progression == c.progression && k.modulus == m) c.rediscovers.push_back(claim_tag(k));
        }
        out.push_back(std::move(c));
      }
    }
  }
  for (auto& fine : out) {
    for (const auto& coarse : out) {
      if (!implies(coarse, fine)) continue;
      // Keep the coarsest witness: smallest step, then largest modulus.
      const bool better = !fine.implied_by ||
                          coarse.progression.step < fine.implied_by->progression.step ||
                          (coarse.progression.step == fine.implied_by->progression.step &&
                           coarse.modulus > fine.implied_by->modulus);
      if (better) fine.implied_by = ImpliedBy{coarse.progression, coarse.modulus};
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SearchCandidate& x, const SearchCandidate& y) {
    if (x.evidence != y.evidence) return x.evidence > y.evidence;
    if (x.progression.step != y.progression.step) return x.progression.step < y.progression.step;
    if (x.progression.offset != y.progression.offset) {
      return x.progression.offset < y.progression.offset;
    }
    return x.modulus < y.modulus;
  });
  return out;
}

nlohmann::ordered_json to_json(const SearchCandidate& c) {
  nlohmann::ordered_json j;
  j["progression"] = {{"step", c.progression.step}, {"offset", c.progression.offset}};
  j["modulus"] = c.modulus;
  j["evidence"] = c.evidence;
  j["rediscovers"] = c.rediscovers;
  if (c.implied_by) {
    j["implied_by"] = {{"step", c.implied_by->progression.step},
                       {"offset", c.implied_by->progression.offset},
                       {"modulus", c.implied_by->modulus}};
  } else {
    j["implied_by"] = nullptr;
  }
  return j;
}

std::string render_search(const std::vector<SearchCandidate>& candidates) {
  std::ostringstream out;
  for (const auto& c : candidates) {
    out << c.progression.step << "n+" << c.progression.offset << " mod " << c.modulus
        << " evidence=" << c.evidence;
    if (c.implied_by) {
      out << " implied_by=" << c.implied_by->progression.step << "n+"
          << c.implied_by->progression.offset << " mod " << c.implied_by->modulus;
    }
    for (const auto& k : c.rediscovers) out << " [" << k << "]";
    out << '\n';
  }
  return out.str();
}

}  // namespace qcong
