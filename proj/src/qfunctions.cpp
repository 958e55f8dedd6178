#include "qcong/qfunctions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qcong {

namespace {

// Adds `sign` at `exponent` when it falls inside the order.
void accumulate(std::vector<mpz_class>& c, long long exponent, int sign) {
  if (exponent >= 0 && static_cast<unsigned long long>(exponent) < c.size()) {
    c[static_cast<std::size_t>(exponent)] += sign;
  }
}

}  // namespace

void ThetaSpec::validate() const {
  if ((sign_x != 1 && sign_x != -1) || (sign_y != 1 && sign_y != -1)) {
    throw ArgumentError("theta signs must be +1 or -1");
  }
  if (exponent_x + exponent_y <= 0) {
    throw ArgumentError("divergent theta specification: need a + b > 0 (got a=" +
                        std::to_string(exponent_x) + ", b=" + std::to_string(exponent_y) + ")");
  }
}

Series euler_product(unsigned h, std::size_t order, std::optional<Modulus> modulus) {
  if (h == 0) throw ArgumentError("euler_product scale must be positive");
  std::vector<mpz_class> c(order);
  const auto limit = static_cast<long long>(order);
  // sum over all integers v of (-1)^v q^{h v(3v+1)/2}; both directions grow monotonically.
  for (long long v = 0;; ++v) {
    const long long e = static_cast<long long>(h) * (v * (3 * v + 1) / 2);
    if (e >= limit) break;
    accumulate(c, e, v % 2 == 0 ? 1 : -1);
  }
  for (long long v = -1;; --v) {
    const long long e = static_cast<long long>(h) * (v * (3 * v + 1) / 2);
    if (e >= limit) break;
    accumulate(c, e, v % 2 == 0 ? 1 : -1);
  }
  return Series::from_coefficients(std::move(c), modulus);
}

Series eta_quotient(const EtaQuotient& quotient, std::size_t order,
                    std::optional<Modulus> modulus) {
  Series result = Series::one(order, modulus);
  // Numerator factors first, then one sparse division per unit of negative exponent.
  for (const auto& [h, e] : quotient.factors()) {
    if (e <= 0) continue;
    const Series f = euler_product(h, order, modulus);
    for (long i = 0; i < e; ++i) result = mul(result, f);
  }
  for (const auto& [h, e] : quotient.factors()) {
    if (e >= 0) continue;
    const Series f = euler_product(h, order, modulus);
    for (long i = 0; i < -e; ++i) result = detail::solve_unit(result, f);
  }
  return result;
}

Series phi(std::size_t order, std::optional<Modulus> modulus) {
  std::vector<mpz_class> c(order);
  accumulate(c, 0, 1);
  for (long long v = 1; v * v < static_cast<long long>(order); ++v) accumulate(c, v * v, 2);
  return Series::from_coefficients(std::move(c), modulus);
}

Series psi(std::size_t order, std::optional<Modulus> modulus) {
  std::vector<mpz_class> c(order);
  for (long long v = 0; v * (v + 1) / 2 < static_cast<long long>(order); ++v) {
    accumulate(c, v * (v + 1) / 2, 1);
  }
  return Series::from_coefficients(std::move(c), modulus);
}

Series phi_neg(std::size_t order, std::optional<Modulus> modulus) {
  Series by_substitution = reflect(phi(order, modulus));
  Series by_product = eta_quotient(EtaQuotient{{1, 2}, {2, -1}}, order, modulus);
  if (!(by_substitution == by_product)) {
    throw std::logic_error("phi(-q): theta sum and f1^2/f2 disagree");
  }
  return by_substitution;
}

Series general_theta(const ThetaSpec& spec, unsigned scale, std::size_t order,
                     std::optional<Modulus> modulus, long shift) {
  spec.validate();
  if (scale == 0) throw ArgumentError("theta scale must be positive");
  const long long a = spec.exponent_x;
  const long long b = spec.exponent_y;
  const auto exponent = [&](long long n) {
    return static_cast<long long>(scale) * (a * (n * (n + 1) / 2) + b * (n * (n - 1) / 2)) + shift;
  };
  const auto sign = [&](long long n) {
    const long long tx = n * (n + 1) / 2;
    const long long ty = n * (n - 1) / 2;
    int s = 1;
    if (spec.sign_x < 0 && tx % 2 != 0) s = -s;
    if (spec.sign_y < 0 && ty % 2 != 0) s = -s;
    return s;
  };

  std::vector<mpz_class> c(order);
  const auto limit = static_cast<long long>(order);
  // The exponent is a convex quadratic in n, so in each direction it is
  // increasing once past the vertex; stop there once it leaves the window.
  for (int direction : {1, -1}) {
    for (long long n = direction > 0 ? 0 : -1;; n += direction) {
      const long long e = exponent(n);
      if (e < 0) {
        throw ArgumentError("theta term n=" + std::to_string(n) + " has negative exponent " +
                            std::to_string(e) + "; the q-shift is too small");
      }
      accumulate(c, e, sign(n));
      if (e >= limit && exponent(n + direction) > e) break;
    }
  }
  return Series::from_coefficients(std::move(c), modulus);
}

namespace {

Series five_square_series(long long linear, unsigned scale, std::size_t order,
                          std::optional<Modulus> modulus) {
  if (scale == 0) throw ArgumentError("scale must be positive");
  std::vector<mpz_class> c(order);
  const auto limit = static_cast<long long>(order);
  for (int direction : {1, -1}) {
    for (long long r = direction > 0 ? 0 : -1;; r += direction) {
      const long long e = static_cast<long long>(scale) * (5 * r * r + linear * r);
      if (e >= limit) break;
      accumulate(c, e, 1);
    }
  }
  return Series::from_coefficients(std::move(c), modulus);
}

}  // namespace

Series x_series(unsigned scale, std::size_t order, std::optional<Modulus> modulus) {
  return five_square_series(2, scale, order, modulus);
}

Series y_series(unsigned scale, std::size_t order, std::optional<Modulus> modulus) {
  return five_square_series(4, scale, order, modulus);
}

}  // namespace qcong
