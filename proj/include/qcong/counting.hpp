#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qcong::counting {

// Partition families counted directly from their definitions.  These tables
// are the reference the series engine is checked against, so nothing here
// uses Series.
enum class Kind {
  plain,                    // p(n)
  overpartition,            // overpartitions of n
  regular,                  // ell-regular partitions b_ell(n)
  overlined_regular,        // overpartitions whose overlined parts are ell-regular
  nonoverlined_regular,     // overpartitions whose non-overlined parts are ell-regular
  distinct_two_copies,      // D2(n): distinct parts, two copies of each size
};

struct PartitionKind {
  Kind kind = Kind::plain;
  unsigned ell = 0;  // used by the three ell-dependent kinds

  std::string name() const;
  friend bool operator==(const PartitionKind&, const PartitionKind&) = default;
};

// Accepts p, overpartition, regular, overlined, rstar (alias nonoverlined), d2.
PartitionKind parse_kind(std::string_view name, unsigned ell);

struct CountTable {
  PartitionKind kind;
  std::size_t upto = 0;
  std::vector<mpz_class> values;  // values[n] for n = 0..upto
};

CountTable count(const PartitionKind& kind, std::size_t upto);

struct Part {
  unsigned size = 0;
  // Overlined part, or the second copy for distinct_two_copies.
  bool marked = false;

  friend bool operator==(const Part&, const Part&) = default;
};

using Partition = std::vector<Part>;  // non-increasing sizes

inline constexpr std::size_t kMaxEnumerate = 12;

// Explicit listing for tiny n; throws ArgumentError past kMaxEnumerate.
std::vector<Partition> enumerate_small(const PartitionKind& kind, std::size_t n);

// "3' + 2 + 1" style rendering; marked parts carry a trailing apostrophe.
std::string to_string(const Partition& partition);

}  // namespace qcong::counting
