#pragma once

#include <cstddef>
#include <optional>

#include "qcong/eta_quotient.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// Parameters of F(sign_x q^a, sign_y q^b) for Ramanujan's two-variable theta
/// function F(x, y) = sum_n x^{n(n+1)/2} y^{n(n-1)/2}.
///
/// Convergence needs a + b > 0.  The exponents may be negative individually;
/// general_theta then needs a q-shift large enough to keep every term a
/// power series.
struct ThetaSpec {
  long exponent_x = 1;
  long exponent_y = 1;
  int sign_x = 1;
  int sign_y = 1;

  // Validates the signs and a + b > 0; throws ArgumentError otherwise.
  void validate() const;
};

// f_h = (q^h; q^h)_inf from the pentagonal-number expansion.
Series euler_product(unsigned h, std::size_t order, std::optional<Modulus> modulus = {});

Series eta_quotient(const EtaQuotient& quotient, std::size_t order,
                    std::optional<Modulus> modulus = {});

// phi(q) = sum_{n in Z} q^{n^2}
Series phi(std::size_t order, std::optional<Modulus> modulus = {});
// psi(q) = sum_{n >= 0} q^{n(n+1)/2}
Series psi(std::size_t order, std::optional<Modulus> modulus = {});
// phi(-q), built as phi with q -> -q and as f1^2/f2; throws std::logic_error if they differ.
Series phi_neg(std::size_t order, std::optional<Modulus> modulus = {});

/// q^shift * F(sign_x q^{a*scale}, sign_y q^{b*scale}) to the given order.
/// The n-th term has exponent scale*(a n(n+1)/2 + b n(n-1)/2) + shift and sign
/// sign_x^{n(n+1)/2} sign_y^{n(n-1)/2}.
Series general_theta(const ThetaSpec& spec, unsigned scale, std::size_t order,
                     std::optional<Modulus> modulus = {}, long shift = 0);

// X(q^scale) with X(q) = sum_r q^{5r^2+2r}; Y(q^scale) with exponents 5r^2+4r.
Series x_series(unsigned scale, std::size_t order, std::optional<Modulus> modulus = {});
Series y_series(unsigned scale, std::size_t order, std::optional<Modulus> modulus = {});

}  // namespace qcong
