#include "qcong/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace qcong {

namespace {

using Residue = Series::Residue;
using Wide = unsigned __int128;

void check_modulus(Modulus m) {
  if (m == 0) throw ArgumentError("modulus must be positive");
  if (m >= kMaxModulus) throw ArgumentError("modulus " + std::to_string(m) + " exceeds 2^62");
}

Residue reduce(const mpz_class& c, Modulus m) { return mpz_fdiv_ui(c.get_mpz_t(), m); }

Residue add_mod(Residue a, Residue b, Modulus m) {
  Residue s = a + b;
  return s >= m ? s - m : s;
}

Residue sub_mod(Residue a, Residue b, Modulus m) { return a >= b ? a - b : a + m - b; }

Residue mul_mod(Residue a, Residue b, Modulus m) {
  return static_cast<Residue>(static_cast<Wide>(a) * b % m);
}

// Inverse of a mod m, or nullopt when gcd(a, m) != 1.
std::optional<Residue> inverse_mod(Residue a, Modulus m) {
  if (m == 1) return Residue{0};
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<Residue>(t);
}

void require_compatible(const Series& a, const Series& b) {
  if (a.modulus() != b.modulus()) {
    auto show = [](const std::optional<Modulus>& m) {
      return m ? std::to_string(*m) : std::string("none");
    };
    throw IncompatibleModulusError("incompatible moduli: " + show(a.modulus()) + " vs " +
                                   show(b.modulus()));
  }
}

template <typename Coeffs>
std::vector<std::size_t> nonzero_indices(const Coeffs& c, std::size_t limit) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < limit; ++i) {
    if (c[i] != 0) idx.push_back(i);
  }
  return idx;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction and access

Series Series::zero(std::size_t order, std::optional<Modulus> modulus) {
  Series s;
  s.order_ = order;
  s.modulus_ = modulus;
  if (modulus) {
    check_modulus(*modulus);
    s.residues_.assign(order, 0);
  } else {
    s.exact_.assign(order, mpz_class(0));
  }
  return s;
}

Series Series::one(std::size_t order, std::optional<Modulus> modulus) {
  return monomial(0, 1, order, modulus);
}

Series Series::monomial(std::size_t exponent, const mpz_class& coefficient, std::size_t order,
                        std::optional<Modulus> modulus) {
  Series s = zero(order, modulus);
  if (exponent < order) {
    if (modulus) {
      s.residues_[exponent] = reduce(coefficient, *modulus);
    } else {
      s.exact_[exponent] = coefficient;
    }
  }
  return s;
}

Series Series::from_coefficients(std::vector<mpz_class> coefficients,
                                 std::optional<Modulus> modulus) {
  Series s;
  s.order_ = coefficients.size();
  s.modulus_ = modulus;
  if (modulus) {
    check_modulus(*modulus);
    s.residues_.reserve(coefficients.size());
    for (const auto& c : coefficients) s.residues_.push_back(reduce(c, *modulus));
  } else {
    s.exact_ = std::move(coefficients);
  }
  return s;
}

Series Series::from_coefficients(std::span<const long> coefficients,
                                 std::optional<Modulus> modulus) {
  std::vector<mpz_class> c(coefficients.begin(), coefficients.end());
  return from_coefficients(std::move(c), modulus);
}

Series Series::from_coefficients(std::initializer_list<long> coefficients,
                                 std::optional<Modulus> modulus) {
  return from_coefficients(std::span<const long>(coefficients.begin(), coefficients.size()),
                           modulus);
}

Series Series::from_residues(std::vector<Residue> residues, Modulus modulus) {
  check_modulus(modulus);
  for (Residue r : residues) {
    if (r >= modulus) throw ArgumentError("residue out of canonical range");
  }
  Series s;
  s.order_ = residues.size();
  s.modulus_ = modulus;
  s.residues_ = std::move(residues);
  return s;
}

mpz_class Series::coefficient(std::size_t index) const {
  if (index >= order_) {
    throw ArgumentError("coefficient index " + std::to_string(index) + " beyond order " +
                        std::to_string(order_));
  }
  return modulus_ ? mpz_class(static_cast<unsigned long>(residues_[index])) : exact_[index];
}

Residue Series::residue(std::size_t index, Modulus m) const {
  check_modulus(m);
  if (index >= order_) {
    throw ArgumentError("coefficient index " + std::to_string(index) + " beyond order " +
                        std::to_string(order_));
  }
  if (modulus_) {
    if (*modulus_ % m != 0) {
      throw IncompatibleModulusError("cannot read residues mod " + std::to_string(m) +
                                     " from a series kept mod " + std::to_string(*modulus_));
    }
    return residues_[index] % m;
  }
  return reduce(exact_[index], m);
}

std::span<const mpz_class> Series::exact_coefficients() const {
  if (modulus_) throw ArgumentError("series is modular; no exact coefficients");
  return exact_;
}

std::span<const Residue> Series::residues() const {
  if (!modulus_) throw ArgumentError("series is exact; no residues");
  return residues_;
}

bool Series::is_zero() const { return nonzero_count() == 0; }

std::size_t Series::nonzero_count() const {
  if (modulus_) {
    return static_cast<std::size_t>(std::count_if(residues_.begin(), residues_.end(),
                                                  [](Residue r) { return r != 0; }));
  }
  return static_cast<std::size_t>(std::count_if(exact_.begin(), exact_.end(),
                                                [](const mpz_class& c) { return sgn(c) != 0; }));
}

std::vector<std::size_t> Series::support() const {
  return modulus_ ? nonzero_indices(residues_, order_) : nonzero_indices(exact_, order_);
}

bool operator==(const Series& a, const Series& b) {
  return a.order_ == b.order_ && a.modulus_ == b.modulus_ && a.exact_ == b.exact_ &&
         a.residues_ == b.residues_;
}

// ---------------------------------------------------------------------------
// Ring operations

Series add(const Series& a, const Series& b) {
  require_compatible(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  if (a.is_modular()) {
    const Modulus m = *a.modulus();
    std::vector<Residue> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = add_mod(a.residues()[i], b.residues()[i], m);
    return Series::from_residues(std::move(out), m);
  }
  std::vector<mpz_class> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.exact_coefficients()[i] + b.exact_coefficients()[i];
  return Series::from_coefficients(std::move(out));
}

Series negate(const Series& a) {
  if (a.is_modular()) {
    const Modulus m = *a.modulus();
    std::vector<Residue> out(a.residues().begin(), a.residues().end());
    for (auto& x : out) x = x == 0 ? 0 : m - x;
    return Series::from_residues(std::move(out), m);
  }
  std::vector<mpz_class> out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out[i] = -a.exact_coefficients()[i];
  return Series::from_coefficients(std::move(out));
}

Series sub(const Series& a, const Series& b) {
  require_compatible(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  if (a.is_modular()) {
    const Modulus m = *a.modulus();
    std::vector<Residue> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = sub_mod(a.residues()[i], b.residues()[i], m);
    return Series::from_residues(std::move(out), m);
  }
  std::vector<mpz_class> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.exact_coefficients()[i] - b.exact_coefficients()[i];
  return Series::from_coefficients(std::move(out));
}

Series scale(const Series& a, const mpz_class& factor) {
  if (a.is_modular()) {
    const Modulus m = *a.modulus();
    const Residue f = reduce(factor, m);
    std::vector<Residue> out(a.residues().begin(), a.residues().end());
    for (auto& x : out) x = mul_mod(x, f, m);
    return Series::from_residues(std::move(out), m);
  }
  std::vector<mpz_class> out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out[i] = a.exact_coefficients()[i] * factor;
  return Series::from_coefficients(std::move(out));
}

namespace {

// Gather form r[n] = sum_{i in idx, i <= n} s[i] * d[n - i], one reduction per n.
std::vector<Residue> mul_residues(std::span<const Residue> s, const std::vector<std::size_t>& idx,
                                  std::span<const Residue> d, std::size_t n, Modulus m) {
  std::vector<Residue> out(n, 0);
  const bool small = m < (Modulus{1} << 32);
  for (std::size_t k = 0; k < n; ++k) {
    Wide acc = 0;
    for (std::size_t i : idx) {
      if (i > k) break;
      acc += static_cast<Wide>(s[i]) * d[k - i];
      if (!small) acc %= m;
    }
    out[k] = static_cast<Residue>(acc % m);
  }
  return out;
}

std::vector<mpz_class> mul_exact(std::span<const mpz_class> s, const std::vector<std::size_t>& idx,
                                 std::span<const mpz_class> d, std::size_t n) {
  std::vector<mpz_class> out(n);
  for (std::size_t i : idx) {
    if (i >= n) break;
    const mpz_class& c = s[i];
    const bool unit = c == 1 || c == -1;
    const bool positive = sgn(c) > 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (sgn(d[j]) == 0) continue;
      mpz_ptr target = out[i + j].get_mpz_t();
      if (unit) {
        if (positive) {
          mpz_add(target, target, d[j].get_mpz_t());
        } else {
          mpz_sub(target, target, d[j].get_mpz_t());
        }
      } else {
        mpz_addmul(target, c.get_mpz_t(), d[j].get_mpz_t());
      }
    }
  }
  return out;
}

}  // namespace

Series mul(const Series& a, const Series& b) {
  require_compatible(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  // Iterate over the nonzeros of the sparser factor.
  const bool a_sparser = a.nonzero_count() <= b.nonzero_count();
  const Series& s = a_sparser ? a : b;
  const Series& d = a_sparser ? b : a;
  const std::vector<std::size_t> support = s.support();
  if (a.is_modular()) {
    const Modulus m = *a.modulus();
    return Series::from_residues(mul_residues(s.residues(), support, d.residues(), n, m), m);
  }
  return Series::from_coefficients(
      mul_exact(s.exact_coefficients(), support, d.exact_coefficients(), n));
}

Series detail::solve_unit(const Series& g, const Series& b) {
  require_compatible(g, b);
  const std::size_t n = std::min(g.order(), b.order());
  if (b.order() == 0) return Series::zero(0, g.modulus());
  std::vector<std::size_t> support = b.support();
  // Drop the constant term; the recurrence handles it separately.
  if (!support.empty() && support.front() == 0) support.erase(support.begin());

  if (b.is_modular()) {
    const Modulus m = *b.modulus();
    const auto unit = inverse_mod(b.residues()[0], m);
    if (!unit) {
      throw NotInvertibleError("constant term " + std::to_string(b.residues()[0]) +
                               " is not a unit mod " + std::to_string(m));
    }
    const auto bs = b.residues();
    const auto gs = g.residues();
    const bool small = m < (Modulus{1} << 32);
    std::vector<Residue> h(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      // acc = sum b_i h_{k-i}; kept below 2^127 by reducing when moduli are wide.
      Wide acc = 0;
      for (std::size_t i : support) {
        if (i > k) break;
        acc += static_cast<Wide>(bs[i]) * h[k - i];
        if (!small) acc %= m;
      }
      const Residue t = sub_mod(gs[k], static_cast<Residue>(acc % m), m);
      h[k] = mul_mod(t, *unit, m);
    }
    return Series::from_residues(std::move(h), m);
  }

  const auto bs = b.exact_coefficients();
  const auto gs = g.exact_coefficients();
  const mpz_class& c0 = bs[0];
  if (c0 != 1 && c0 != -1) {
    throw NotInvertibleError("constant term " + c0.get_str() + " is not a unit");
  }
  const bool negative = c0 == -1;
  std::vector<mpz_class> h(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class acc = gs[k];
    for (std::size_t i : support) {
      if (i > k) break;
      const mpz_class& c = bs[i];
      if (c == 1) {
        acc -= h[k - i];
      } else if (c == -1) {
        acc += h[k - i];
      } else {
        mpz_submul(acc.get_mpz_t(), c.get_mpz_t(), h[k - i].get_mpz_t());
      }
    }
    if (negative) acc = -acc;
    h[k] = std::move(acc);
  }
  return Series::from_coefficients(std::move(h));
}

Series invert(const Series& a) {
  return detail::solve_unit(Series::one(a.order(), a.modulus()), a);
}

Series pow(const Series& a, long exponent) {
  if (exponent == 0) return Series::one(a.order(), a.modulus());
  Series base = exponent < 0 ? invert(a) : a;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1
                                 : static_cast<unsigned long>(exponent);
  std::optional<Series> result;
  while (true) {
    if (e & 1UL) result = result ? mul(*result, base) : base;
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return *result;
}

// ---------------------------------------------------------------------------
// Reindexing

Series extract_progression(const Series& a, std::size_t step, std::size_t offset) {
  if (step == 0) throw ArgumentError("progression step must be positive");
  const std::size_t n = a.order() > offset ? (a.order() - offset + step - 1) / step : 0;
  if (a.is_modular()) {
    std::vector<Residue> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.residues()[step * i + offset];
    return Series::from_residues(std::move(out), *a.modulus());
  }
  std::vector<mpz_class> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.exact_coefficients()[step * i + offset];
  return Series::from_coefficients(std::move(out));
}

Series dissect(const Series& a, std::size_t step, std::size_t residue) {
  if (step == 0) throw ArgumentError("dissection step must be positive");
  if (residue >= step) {
    throw ArgumentError("residue " + std::to_string(residue) + " out of range 0.." +
                        std::to_string(step - 1));
  }
  return extract_progression(a, step, residue);
}

Series reduce_mod(const Series& a, Modulus m) {
  check_modulus(m);
  std::vector<Residue> out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out[i] = a.residue(i, m);
  return Series::from_residues(std::move(out), m);
}

Series shift(const Series& a, std::size_t k) {
  const std::size_t n = a.order() + k;
  if (a.is_modular()) {
    std::vector<Residue> out(n, 0);
    std::copy(a.residues().begin(), a.residues().end(), out.begin() + static_cast<long>(k));
    return Series::from_residues(std::move(out), *a.modulus());
  }
  std::vector<mpz_class> out(n);
  std::copy(a.exact_coefficients().begin(), a.exact_coefficients().end(),
            out.begin() + static_cast<long>(k));
  return Series::from_coefficients(std::move(out));
}

Series dilate(const Series& a, std::size_t k) {
  if (k == 0) throw ArgumentError("dilation factor must be positive");
  const std::size_t n = a.order() * k;
  if (a.is_modular()) {
    std::vector<Residue> out(n, 0);
    for (std::size_t i = 0; i < a.order(); ++i) out[i * k] = a.residues()[i];
    return Series::from_residues(std::move(out), *a.modulus());
  }
  std::vector<mpz_class> out(n);
  for (std::size_t i = 0; i < a.order(); ++i) out[i * k] = a.exact_coefficients()[i];
  return Series::from_coefficients(std::move(out));
}

Series dilate(const Series& a, std::size_t k, std::size_t order) {
  if (k == 0) throw ArgumentError("dilation factor must be positive");
  const std::size_t needed = (order + k - 1) / k;
  if (needed > a.order()) {
    throw ArgumentError("dilation by " + std::to_string(k) + " to order " + std::to_string(order) +
                        " needs " + std::to_string(needed) + " coefficients, have " +
                        std::to_string(a.order()));
  }
  return truncate(dilate(truncate(a, needed), k), order);
}

Series reflect(const Series& a) {
  if (a.is_modular()) {
    const Modulus m = *a.modulus();
    std::vector<Residue> out(a.residues().begin(), a.residues().end());
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = out[i] == 0 ? 0 : m - out[i];
    return Series::from_residues(std::move(out), m);
  }
  std::vector<mpz_class> out(a.exact_coefficients().begin(), a.exact_coefficients().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Series::from_coefficients(std::move(out));
}

Series truncate(const Series& a, std::size_t order) {
  if (order > a.order()) {
    throw ArgumentError("cannot extend a series of order " + std::to_string(a.order()) +
                        " to " + std::to_string(order));
  }
  if (a.is_modular()) {
    return Series::from_residues(
        std::vector<Residue>(a.residues().begin(), a.residues().begin() + static_cast<long>(order)),
        *a.modulus());
  }
  return Series::from_coefficients(std::vector<mpz_class>(
      a.exact_coefficients().begin(), a.exact_coefficients().begin() + static_cast<long>(order)));
}

CongruenceCheck congruent_mod(const Series& a, const Series& b, Modulus m, std::size_t upto) {
  check_modulus(m);
  if (a.order() < upto || b.order() < upto) {
    throw ArgumentError("congruence check up to " + std::to_string(upto) +
                        " needs both orders >= upto (have " + std::to_string(a.order()) + ", " +
                        std::to_string(b.order()) + ")");
  }
  for (std::size_t i = 0; i < upto; ++i) {
    const Residue x = a.residue(i, m);
    const Residue y = b.residue(i, m);
    if (x != y) return {false, Mismatch{i, x, y}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Serialization

std::string to_text(const Series& a, bool sparse) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.order(); ++i) {
    const mpz_class c = a.coefficient(i);
    if (sparse && sgn(c) == 0) continue;
    out << i << ' ' << c.get_str() << '\n';
  }
  return out.str();
}

std::string to_json(const Series& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (i) out += ',';
    out += a.coefficient(i).get_str();
  }
  out += ']';
  return out;
}

Series series_from_json(std::string_view text, std::optional<Modulus> modulus) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> Series {
    throw ArgumentError("malformed series JSON at offset " + std::to_string(pos) + ": " + what);
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') return fail("expected '['");
  ++pos;
  std::vector<mpz_class> coeffs;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      const std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || (pos == start + 1 && text[start] == '-')) return fail("expected integer");
      coeffs.emplace_back(std::string(text.substr(start, pos - start)), 10);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      return fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (pos != text.size()) return fail("trailing characters");
  return Series::from_coefficients(std::move(coeffs), modulus);
}

}  // namespace qcong
