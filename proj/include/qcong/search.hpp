#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcong/congruence.hpp"

namespace qcong {

struct SearchOptions {
  unsigned ell = 2;
  std::size_t max_step = 4;
  Modulus max_modulus = 4;
  std::size_t order = 500;
  std::size_t min_support = 50;
};

struct ImpliedBy {
  Progression progression;
  Modulus modulus = 0;
};

struct SearchCandidate {
  Progression progression;
  Modulus modulus = 0;
  std::size_t evidence = 0;               // coefficients checked, all divisible by modulus
  std::vector<std::string> rediscovers;   // known family instances with this exact progression
  std::optional<ImpliedBy> implied_by;    // a coarser candidate that already forces this one
};

/// Scans R*_ell(a n + b) == 0 (mod m) for 1 <= a <= max_step, 0 <= b < a,
/// 2 <= m <= max_modulus over the first `order` coefficients.  Progressions
/// with fewer than min_support coefficients are skipped.  Sorted by evidence,
/// then step, offset and modulus.
std::vector<SearchCandidate> search(const SearchOptions& options);

nlohmann::ordered_json to_json(const SearchCandidate& c);
std::string render_search(const std::vector<SearchCandidate>& candidates);

}  // namespace qcong
