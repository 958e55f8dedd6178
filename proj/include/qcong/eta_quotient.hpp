#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcong {

/// prod_h f_h^{e_h} with f_h = (q^h; q^h)_inf.  Scales are kept sorted, duplicate
/// scales merged and zero exponents dropped, so equal products compare equal.
class EtaQuotient {
 public:
  using Factor = std::pair<unsigned, long>;  // (scale h, exponent e)

  EtaQuotient() = default;
  EtaQuotient(std::initializer_list<Factor> factors);
  explicit EtaQuotient(const std::vector<Factor>& factors);

  // Parses "2:1,4:1,1:-2".
  static EtaQuotient parse(std::string_view text);

  std::vector<Factor> factors() const;
  long exponent(unsigned scale) const;
  bool empty() const noexcept { return exponents_.empty(); }
  bool has_negative_exponent() const;

  EtaQuotient& operator*=(const EtaQuotient& other);
  friend EtaQuotient operator*(EtaQuotient a, const EtaQuotient& b) { return a *= b; }
  EtaQuotient inverse() const;

  // Canonical "h:e,h:e" form (ascending scales); the empty product prints as "".
  std::string to_string() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
  friend auto operator<=>(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  void add_factor(unsigned scale, long exponent);

  std::map<unsigned, long> exponents_;
};

// Generating function of overpartitions whose non-overlined parts are ell-regular: f2 f_ell / f1^2.
EtaQuotient rstar_quotient(unsigned ell);

}  // namespace qcong
