#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcong/eta_quotient.hpp"
#include "qcong/report.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// Congruence families for R*_ell(n), the overpartitions of n whose
/// non-overlined parts are ell-regular.  Names follow the theorem/part
/// numbering used on the command line ("thm3.5.ii").
enum class Family {
  thm3_1_i,    // R*_4(4n+xi) == 0 mod 4, xi = 2, 3
  thm3_1_q1,   // sum R*_4(4p^{2a} n + (7p^{2a}-1)/6) q^n == 2 f1 psi(q^2) mod 4
  thm3_1_ii,   // R*_4(4p^{2a+1}(pn+r) + (7p^{2a+2}-1)/6) == 0 mod 4, r = 1..p-1
  thm3_2_i,    // R*_{5k}(5n+xi) == 0 mod 4, xi = 2, 3
  thm3_2_ii,   // R*_{5k}(5n+1) == 0 mod 2
  thm3_3_i,    // R*_6(9^a n + (9^a-1)/4) == R*_6(n) mod 3
  thm3_3_ii,   // R*_6(9^{a+1} n + (21*9^a-1)/4) == 0 mod 3
  thm3_3_iii,  // R*_6(9^{a+1} n + (33*9^a-1)/4) == 0 mod 3
  thm3_4_i,    // sum R*_6(2p^{2a} n + (5p^{2a}-1)/4) q^n == 2 psi(q) psi(q^4) mod 3
  thm3_4_ii,   // R*_6(2p^{2a+1}(pn+r) + (5p^{2a+2}-1)/4) == 0 mod 3
  thm3_5_i,    // R*_8(4n+xi) == 0 mod 4, xi = 2, 3
  thm3_5_ii,   // R*_8(16n+4xi+1) == 0 mod 4, xi = 1, 2, 3
  thm3_6_i,    // R*_8(4n+3) == 0 mod 8
  thm3_6_ii,   // R*_8(8n+2xi+1) == 0 mod 8, xi = 1, 2, 3
  thm3_7_i,    // sum R*_8(8p^{2a} n + (4p^{2a}-1)/3) q^n == 2 f1 psi(q) mod 8
  thm3_7_ii,   // R*_8(8p^{2a+1}(pn+r) + (4p^{2a+2}-1)/3) == 0 mod 8
  thm3_7_iii,  // R*_8(16n+1)/2 == sum_{v>=0} p(n - v(v+1)/2) mod 4 (and mod 2)
  thm3_8_i,    // R*_l(n) + sum_{v>=1} R*_l(n - l v) p(v) = pbar(n)
  thm3_8_ii,   // R*_2(n) = D2(n)
};

const std::vector<Family>& all_families();
std::string family_name(Family f);
Family family_from_name(std::string_view name);
// "thm3.5" selects every part of that theorem, "thm3.5.ii" a single family, "all" everything.
std::vector<Family> families_matching(std::string_view selector);

struct Progression {
  std::size_t step = 1;
  std::size_t offset = 0;

  friend bool operator==(const Progression&, const Progression&) = default;
};

// Series order needed to read `terms` coefficients along the progression.
std::size_t required_order(const Progression& progression, std::size_t terms);

enum class Rhs {
  zero,
  two_f1_psi_q2,       // 2 f1 psi(q^2)
  two_psi_psi4,        // 2 psi(q) psi(q^4)
  two_f1_psi,          // 2 f1 psi(q)
  self,                // the undissected source series
  p_convolution,       // sum_{v>=0} p(n - v(v+1)/2), from the partition oracle
  overpartition_conv,  // exact: R*_l convolved with p(v) at multiples of l vs. pbar(n)
  d2,                  // exact: D2(n) from the oracle
  expression,          // built by CongruenceClaim::rhs_builder
};

// Offset formula for the thm3.3.i family.
enum class OffsetVariant {
  statement,       // (9^a - 1)/4
  over_two,        // (9^a - 1)/2, kept only to document that it fails
};

// Sign of the thm3.7.i right side.
enum class RhsSign {
  statement,   // +2 f1 psi(q) for every alpha
  dissection,  // (-1)^{alpha k*} 2 f1 psi(q), k* the isolated index of the f1 p-dissection
};

struct FamilyParams {
  std::uint64_t p = 0;
  unsigned alpha = 0;
  unsigned k = 1;    // thm3.2: ell = 5k
  unsigned ell = 0;  // thm3.8.i
  OffsetVariant offset_variant = OffsetVariant::statement;
  Modulus modulus = 0;  // thm3.7.iii: 4 or 2; 0 means both
  RhsSign rhs_sign = RhsSign::statement;
};

using RhsBuilder = std::function<Series(std::size_t order, std::optional<Modulus> modulus)>;

struct CongruenceClaim {
  Family family = Family::thm3_1_i;
  std::string label;
  std::vector<std::pair<std::string, long>> params;
  unsigned ell = 0;
  EtaQuotient source;
  Progression progression;
  std::optional<Modulus> modulus;  // nullopt: exact equality
  Rhs rhs = Rhs::zero;
  std::string rhs_description;
  RhsBuilder rhs_builder;  // only for Rhs::expression
  int rhs_sign = 1;        // multiplies the right side
  bool halve = false;      // compare R(an+b)/2 instead of R(an+b)
};

/// Primes p <= bound satisfying the family's hypothesis (lower bound and
/// Legendre condition).  Throws ArgumentError for families without one.
std::vector<std::uint64_t> eligible_primes(Family family, std::uint64_t bound);

// Throws EligibilityError naming the failed hypothesis.
void check_eligibility(Family family, std::uint64_t p);

std::vector<CongruenceClaim> instantiate(Family family, const FamilyParams& params);

/// Thread-safe cache of expanded source series keyed by (quotient, modulus).
/// A request is served from any cached expansion of at least the requested
/// order; concurrent requests for the same key share one computation.
class SeriesCache {
 public:
  std::shared_ptr<const Series> get(const EtaQuotient& quotient, std::optional<Modulus> modulus,
                                    std::size_t order);

 private:
  struct Entry {
    std::size_t order = 0;
    std::shared_future<std::shared_ptr<const Series>> value;
  };
  std::mutex mutex_;
  std::map<std::pair<std::string, Modulus>, Entry> entries_;
};

struct VerifyOptions {
  std::size_t max_order = 200000;
  SeriesCache* cache = nullptr;
};

VerificationReport verify(const CongruenceClaim& claim, std::size_t terms,
                          const VerifyOptions& options = {});

// Verifies claims in parallel (bounded by QCONG_THREADS); output order matches input order.
std::vector<VerificationReport> verify_batch(
    const std::vector<std::pair<CongruenceClaim, std::size_t>>& claims,
    const VerifyOptions& options = {});

// Congruences established along the way in the proofs; checking them first
// localizes transcription errors in the main families.
enum class IntermediateId {
  r4_4n1_mod4,    // sum R*_4(4n+1) q^n == 2 f1 psi(q^2) mod 4
  r6_2n1_mod3,    // sum R*_6(2n+1) q^n == 2 psi(q) psi(q^4) mod 3
  r6_3n2_mod3,    // sum R*_6(3n+2) q^n == psi(q^3)^2 mod 3
  r6_mod3,        // sum R*_6(n) q^n == psi(q)^2 mod 3
  r8_2n1_exact,   // sum R*_8(2n+1) q^n = 2 f2^2 f8^2 / f1^4
  r8_2n1_mod8,    // sum R*_8(2n+1) q^n == 2 f8^2 mod 8
  r8_4n1_mod4,    // sum R*_8(4n+1) q^n == 2 f4^2 mod 4
  r8_16n1_mod4,   // sum R*_8(16n+1) q^n == 2 f1^2 == 2 f2^2/f1^2 mod 4
};

const std::vector<IntermediateId>& all_intermediates();
std::string intermediate_name(IntermediateId id);
IntermediateId intermediate_from_name(std::string_view name);
CongruenceClaim intermediate_claim(IntermediateId id);
VerificationReport verify_intermediate(IntermediateId id, std::size_t terms,
                                       const VerifyOptions& options = {});

// Worker count for parallel verification: QCONG_THREADS if set, else hardware concurrency.
unsigned thread_budget();

}  // namespace qcong
