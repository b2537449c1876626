#pragma once

#include <cstdint>

namespace latrec {

/// Deterministic Miller-Rabin; exact for n < 3.3e14 (witnesses 2..17).
bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);
/// Largest prime strictly smaller than n, or 0 if none.
std::uint64_t prev_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Inverse of a modulo prime p (a not divisible by p).
std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p);
/// Representative of a in [0, m).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace latrec
