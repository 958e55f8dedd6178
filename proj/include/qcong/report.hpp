#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace qcong {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct Counterexample {
  std::size_t index = 0;             // n, the position in the checked sequence
  std::size_t coefficient_index = 0;  // a*n + b in the source series
  mpz_class found;
  mpz_class expected;
};

/// Outcome of one identity or congruence check.
struct VerificationReport {
  std::string family;
  std::string description;
  std::vector<std::pair<std::string, long>> params;
  std::optional<std::pair<std::size_t, std::size_t>> progression;  // (step, offset)
  std::optional<std::uint64_t> modulus;                            // nullopt: exact check
  std::size_t terms_checked = 0;
  Status status = Status::pass;
  std::string skip_reason;
  std::vector<Counterexample> counterexamples;  // first few only
  std::size_t mismatch_total = 0;
  std::vector<std::string> notes;
  std::int64_t wall_time_us = 0;

  static constexpr std::size_t kMaxCounterexamples = 16;

  bool passed() const noexcept { return status == Status::pass; }
  // Records a mismatch (keeping at most kMaxCounterexamples) and marks the report failed.
  void add_counterexample(Counterexample c);
  void mark_skipped(std::string reason);
};

nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

// Fixed-width table, one row per report.
std::string render_table(const std::vector<VerificationReport>& reports);

}  // namespace qcong
