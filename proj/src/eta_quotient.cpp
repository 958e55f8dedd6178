#include "qcong/eta_quotient.hpp"

#include <charconv>

#include "qcong/errors.hpp"

namespace qcong {

EtaQuotient::EtaQuotient(std::initializer_list<Factor> factors) {
  for (const auto& [h, e] : factors) add_factor(h, e);
}

EtaQuotient::EtaQuotient(const std::vector<Factor>& factors) {
  for (const auto& [h, e] : factors) add_factor(h, e);
}

void EtaQuotient::add_factor(unsigned scale, long exponent) {
  if (scale == 0) throw ArgumentError("eta quotient scale must be positive");
  long& slot = exponents_[scale];
  slot += exponent;
  if (slot == 0) exponents_.erase(scale);
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
  EtaQuotient q;
  auto bad = [&](std::string_view item) {
    return ArgumentError("malformed eta factor '" + std::string(item) +
                         "' (expected scale:exponent, e.g. 2:1,1:-2)");
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw bad(item);
    unsigned h = 0;
    long e = 0;
    const auto hs = item.substr(0, colon);
    const auto es = item.substr(colon + 1);
    auto r1 = std::from_chars(hs.data(), hs.data() + hs.size(), h);
    auto r2 = std::from_chars(es.data(), es.data() + es.size(), e);
    if (r1.ec != std::errc{} || r1.ptr != hs.data() + hs.size() || r2.ec != std::errc{} ||
        r2.ptr != es.data() + es.size()) {
      throw bad(item);
    }
    q.add_factor(h, e);
  }
  return q;
}

std::vector<EtaQuotient::Factor> EtaQuotient::factors() const {
  return {exponents_.begin(), exponents_.end()};
}

long EtaQuotient::exponent(unsigned scale) const {
  const auto it = exponents_.find(scale);
  return it == exponents_.end() ? 0 : it->second;
}

bool EtaQuotient::has_negative_exponent() const {
  for (const auto& [h, e] : exponents_) {
    if (e < 0) return true;
  }
  return false;
}

EtaQuotient& EtaQuotient::operator*=(const EtaQuotient& other) {
  for (const auto& [h, e] : other.exponents_) add_factor(h, e);
  return *this;
}

EtaQuotient EtaQuotient::inverse() const {
  EtaQuotient q;
  for (const auto& [h, e] : exponents_) q.exponents_[h] = -e;
  return q;
}

std::string EtaQuotient::to_string() const {
  std::string out;
  for (const auto& [h, e] : exponents_) {
    if (!out.empty()) out += ',';
    out += std::to_string(h) + ':' + std::to_string(e);
  }
  return out;
}

EtaQuotient rstar_quotient(unsigned ell) {
  if (ell == 0) throw ArgumentError("ell must be positive");
  return EtaQuotient{{2, 1}, {ell, 1}, {1, -2}};
}

}  // namespace qcong
