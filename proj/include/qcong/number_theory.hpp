#pragma once

#include <cstdint>

namespace qcong {

bool is_prime(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Legendre symbol (a/p) by Euler's criterion; p must be an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

// a mod m in [0, m) for signed a.
std::uint64_t floor_mod(std::int64_t a, std::uint64_t m);

}  // namespace qcong
