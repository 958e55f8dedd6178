#include "qcong/number_theory.hpp"

#include <string>

#include "qcong/errors.hpp"

namespace qcong {

namespace {

using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 0) throw ArgumentError("pow_mod: modulus must be positive");
  std::uint64_t result = 1 % m;
  base %= m;
  while (exponent) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

// Deterministic for all 64-bit n with these bases.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::uint64_t floor_mod(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw ArgumentError("floor_mod: modulus must be positive");
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  const std::uint64_t r = (static_cast<std::uint64_t>(-(a + 1)) + 1) % m;
  return r == 0 ? 0 : m - r;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw ArgumentError("legendre symbol needs an odd prime, got " + std::to_string(p));
  }
  const std::uint64_t r = floor_mod(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace qcong
