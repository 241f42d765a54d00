#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace aliquot {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest n supported by the divisor and factorisation routines.
inline constexpr u64 kMaxN = 1'000'000'000'000ULL;

u64 isqrt(u64 n);

u64 gcd(u64 a, u64 b);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial division up to 10^6, then a primality test on the cofactor.
// Requires 1 <= n <= kMaxN; throws ParameterError otherwise.
std::vector<PrimePower> factorize(u64 n);

u64 totient(u64 n);

// base^exp, or nullopt when the result does not fit in 64 bits.
std::optional<u64> checked_pow(u64 base, unsigned exp);

// Smallest multiple of m that is >= n.
inline u64 round_up(u64 n, u64 m) { return (n + m - 1) / m * m; }

}  // namespace aliquot
