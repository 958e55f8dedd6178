#include "qcong/counting.hpp"

#include <functional>

#include "qcong/errors.hpp"

namespace qcong::counting {

namespace {

bool needs_ell(Kind k) {
  return k == Kind::regular || k == Kind::overlined_regular || k == Kind::nonoverlined_regular;
}

// How many copies of part size s each kind admits.
struct Allowance {
  bool unlimited = false;  // non-overlined copies, any multiplicity
  int at_most_once = 0;    // independent at-most-once copies (overlined, or colours for D2)
};

Allowance allowance(const PartitionKind& k, unsigned s) {
  const bool divisible = k.ell != 0 && s % k.ell == 0;
  switch (k.kind) {
    case Kind::plain:
      return {true, 0};
    case Kind::overpartition:
      return {true, 1};
    case Kind::regular:
      return {!divisible, 0};
    case Kind::overlined_regular:
      return {true, divisible ? 0 : 1};
    case Kind::nonoverlined_regular:
      return {!divisible, 1};
    case Kind::distinct_two_copies:
      return {false, 2};
  }
  return {};
}

void validate(const PartitionKind& k) {
  if (needs_ell(k.kind) && k.ell == 0) throw ArgumentError(k.name() + " needs ell >= 1");
}

}  // namespace

std::string PartitionKind::name() const {
  switch (kind) {
    case Kind::plain:
      return "p";
    case Kind::overpartition:
      return "overpartition";
    case Kind::regular:
      return "regular(" + std::to_string(ell) + ")";
    case Kind::overlined_regular:
      return "overlined(" + std::to_string(ell) + ")";
    case Kind::nonoverlined_regular:
      return "rstar(" + std::to_string(ell) + ")";
    case Kind::distinct_two_copies:
      return "d2";
  }
  return "?";
}

PartitionKind parse_kind(std::string_view name, unsigned ell) {
  PartitionKind k;
  if (name == "p" || name == "plain") {
    k.kind = Kind::plain;
  } else if (name == "overpartition" || name == "pbar") {
    k.kind = Kind::overpartition;
  } else if (name == "regular") {
    k.kind = Kind::regular;
  } else if (name == "overlined") {
    k.kind = Kind::overlined_regular;
  } else if (name == "rstar" || name == "nonoverlined") {
    k.kind = Kind::nonoverlined_regular;
  } else if (name == "d2") {
    k.kind = Kind::distinct_two_copies;
  } else {
    throw ArgumentError("unknown partition kind '" + std::string(name) +
                        "' (p, overpartition, regular, overlined, rstar, d2)");
  }
  if (needs_ell(k.kind)) k.ell = ell;
  validate(k);
  return k;
}

// Part-by-part knapsack: an unlimited part size s contributes 1/(1-q^s),
// each at-most-once copy contributes (1+q^s).
CountTable count(const PartitionKind& kind, std::size_t upto) {
  validate(kind);
  CountTable table{kind, upto, std::vector<mpz_class>(upto + 1)};
  auto& v = table.values;
  v[0] = 1;
  for (std::size_t s = 1; s <= upto; ++s) {
    const Allowance a = allowance(kind, static_cast<unsigned>(s));
    if (a.unlimited) {
      for (std::size_t n = s; n <= upto; ++n) v[n] += v[n - s];
    }
    for (int copy = 0; copy < a.at_most_once; ++copy) {
      for (std::size_t n = upto; n >= s; --n) v[n] += v[n - s];
    }
  }
  return table;
}

std::vector<Partition> enumerate_small(const PartitionKind& kind, std::size_t n) {
  validate(kind);
  if (n > kMaxEnumerate) {
    throw ArgumentError("enumerate_small refuses n=" + std::to_string(n) + " (limit " +
                        std::to_string(kMaxEnumerate) + ")");
  }
  std::vector<Partition> out;
  Partition current;
  // Choose the multiset for each part size from the largest down.
  std::function<void(unsigned, std::size_t)> go = [&](unsigned size, std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (size == 0) return;
    const Allowance a = allowance(kind, size);
    // Subsets of the at-most-once copies; D2 has an unmarked and a marked copy.
    static const std::vector<std::vector<bool>> none = {{}};
    static const std::vector<std::vector<bool>> one = {{}, {true}};
    static const std::vector<std::vector<bool>> two = {{}, {false}, {true}, {false, true}};
    const auto& subsets = a.at_most_once == 0 ? none : a.at_most_once == 1 ? one : two;
    for (const auto& subset : subsets) {
      std::size_t used = subset.size() * size;
      if (used > remaining) continue;
      const std::size_t base = current.size();
      for (bool marked : subset) current.push_back({size, marked});
      while (true) {
        go(size - 1, remaining - used);
        if (!a.unlimited || used + size > remaining) break;
        current.push_back({size, false});
        used += size;
      }
      current.resize(base);
    }
  };
  go(static_cast<unsigned>(n), n);
  return out;
}

std::string to_string(const Partition& partition) {
  if (partition.empty()) return "()";
  std::string out;
  for (const auto& part : partition) {
    if (!out.empty()) out += " + ";
    out += std::to_string(part.size);
    if (part.marked) out += '\'';
  }
  return out;
}

}  // namespace qcong::counting
