#pragma once

#include <cstdint>
#include <numeric>

#include "lef/errors.hpp"

namespace lef {

/// Residues are stored in one byte; the moduli in scope are at most 97.
inline constexpr std::uint32_t kMaxModulus = 251;

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime_modulus(std::uint32_t p) {
  if (!is_prime(p) || p > kMaxModulus)
    throw InvalidArgument("modulus must be a prime <= 251, got " + std::to_string(p));
}

constexpr std::uint32_t reduce(std::int64_t x, std::uint32_t p) {
  auto r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

constexpr std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Inverse of a modulo p (p prime, a != 0 mod p).
constexpr std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  return pow_mod(a, p - 2, p);
}

/// Inverse of a modulo m for gcd(a, m) = 1 (m need not be prime).
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InvalidArgument("inv_mod: arguments are not coprime");
  std::int64_t res = old_s % static_cast<std::int64_t>(m);
  if (res < 0) res += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(res);
}

/// Element of the prime field F_p.
struct FpScalar {
  std::uint32_t value = 0;
  std::uint32_t p = 2;

  friend bool operator==(const FpScalar&, const FpScalar&) = default;
};

}  // namespace lef
