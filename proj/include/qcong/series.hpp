#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qcong/errors.hpp"

namespace qcong {

using Modulus = std::uint64_t;

// Largest modulus accepted by the machine-word residue path.
inline constexpr Modulus kMaxModulus = Modulus{1} << 62;

/// Truncated formal power series c_0 + c_1 q + ... + c_{N-1} q^{N-1}.
///
/// Without a modulus the coefficients are arbitrary-precision integers.
/// With a modulus m every coefficient is kept as a residue in [0, m) and
/// stored in a machine word, which is the representation all of the
/// congruence checks run on.
///
/// Values are immutable once built; every operation returns a new series
/// truncated to the smaller operand order.
class Series {
 public:
  using Residue = std::uint64_t;

  Series() = default;

  static Series zero(std::size_t order, std::optional<Modulus> modulus = {});
  static Series one(std::size_t order, std::optional<Modulus> modulus = {});
  static Series monomial(std::size_t exponent, const mpz_class& coefficient, std::size_t order,
                         std::optional<Modulus> modulus = {});
  static Series from_coefficients(std::vector<mpz_class> coefficients,
                                  std::optional<Modulus> modulus = {});
  static Series from_coefficients(std::span<const long> coefficients,
                                  std::optional<Modulus> modulus = {});
  static Series from_coefficients(std::initializer_list<long> coefficients,
                                  std::optional<Modulus> modulus = {});
  // Takes residues already in [0, modulus).
  static Series from_residues(std::vector<Residue> residues, Modulus modulus);

  std::size_t order() const noexcept { return order_; }
  const std::optional<Modulus>& modulus() const noexcept { return modulus_; }
  bool is_modular() const noexcept { return modulus_.has_value(); }

  mpz_class coefficient(std::size_t index) const;
  // Coefficient reduced into [0, m); the series' own modulus must be a multiple of m.
  Residue residue(std::size_t index, Modulus m) const;

  std::span<const mpz_class> exact_coefficients() const;
  std::span<const Residue> residues() const;

  bool is_zero() const;
  std::size_t nonzero_count() const;
  std::vector<std::size_t> support() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  std::size_t order_ = 0;
  std::optional<Modulus> modulus_;
  std::vector<mpz_class> exact_;
  std::vector<Residue> residues_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const mpz_class& factor);
Series mul(const Series& a, const Series& b);
Series invert(const Series& a);
Series pow(const Series& a, long exponent);

/// Coefficients at step*n + residue, reindexed by n.
Series dissect(const Series& a, std::size_t step, std::size_t residue);
/// Like dissect, but the offset may be any non-negative integer (676n + 821 and so on).
Series extract_progression(const Series& a, std::size_t step, std::size_t offset);

Series reduce_mod(const Series& a, Modulus m);

// q^k * a; order grows by k since the low coefficients are known zeros.
Series shift(const Series& a, std::size_t k);
// a(q^k); exact up to order k * order(a).
Series dilate(const Series& a, std::size_t k);
// a(q^k) truncated to `order`, which must not exceed k * order(a).
Series dilate(const Series& a, std::size_t k, std::size_t order);
// a(-q).
Series reflect(const Series& a);
Series truncate(const Series& a, std::size_t order);

struct Mismatch {
  std::size_t index = 0;
  Series::Residue lhs = 0;
  Series::Residue rhs = 0;
};

struct CongruenceCheck {
  bool holds = true;
  std::optional<Mismatch> first_mismatch;

  explicit operator bool() const noexcept { return holds; }
};

CongruenceCheck congruent_mod(const Series& a, const Series& b, Modulus m, std::size_t upto);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(long c, const Series& a) { return scale(a, mpz_class(c)); }

// "index coefficient" lines; with sparse=true zero coefficients are skipped.
std::string to_text(const Series& a, bool sparse = true);
// Compact JSON array of exact decimal integers.
std::string to_json(const Series& a);
Series series_from_json(std::string_view text, std::optional<Modulus> modulus = {});

namespace detail {

// Solves b * h = g for h up to min order; b's constant term must be a unit.
// Cost is O(order * nonzeros(b)), which is what makes eta products cheap.
Series solve_unit(const Series& g, const Series& b);

}  // namespace detail

}  // namespace qcong
