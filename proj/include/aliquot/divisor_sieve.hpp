#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aliquot/arith.hpp"

namespace aliquot {

// All primes <= limit, ascending, plus an O(1) membership test.
class PrimeTable {
 public:
  // Largest limit primes_up_to will accept (~32 MiB of bitmap plus the list).
  static constexpr u64 kMaxLimit = 2'000'000'000ULL;

  PrimeTable() = default;

  u64 limit() const noexcept { return limit_; }
  std::span<const u64> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }

  // Requires n <= limit().
  bool contains(u64 n) const;

 private:
  friend PrimeTable primes_up_to(u64 limit);

  u64 limit_ = 0;
  std::vector<u64> primes_;
  std::vector<bool> odd_composite_;  // index i <-> 2i+1
};

// Sieve of Eratosthenes. Throws ResourceError above PrimeTable::kMaxLimit.
PrimeTable primes_up_to(u64 limit);

// sigma(n), omega(n) for every n in [lo, hi). Immutable once built.
class SieveSegment {
 public:
  u64 lo() const noexcept { return lo_; }
  u64 hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return sigma_.size(); }

  std::span<const u64> sigma() const noexcept { return sigma_; }
  std::span<const std::uint8_t> omega() const noexcept { return omega_; }

  u64 sigma_at(u64 n) const { return sigma_[n - lo_]; }
  std::uint8_t omega_at(u64 n) const { return omega_[n - lo_]; }
  // s(n) = sigma(n) - n
  u64 s_at(u64 n) const { return sigma_[n - lo_] - n; }

 private:
  friend SieveSegment sieve_range(u64 lo, u64 hi, const PrimeTable& pt);

  u64 lo_ = 0;
  u64 hi_ = 0;
  std::vector<u64> sigma_;
  std::vector<std::uint8_t> omega_;
};

// Tabulates sigma and omega over [lo, hi) by stripping each prime p <= sqrt(hi-1)
// from its multiples. Requires 1 <= lo < hi <= kMaxN + 1 and pt.limit()^2 >= hi - 1.
SieveSegment sieve_range(u64 lo, u64 hi, const PrimeTable& pt);

// Number of sieve_range calls made by this process (instrumentation).
u64 segments_built() noexcept;

// Sum of divisors by trial division up to sqrt(n).
u64 sigma_naive(u64 n);

// Sum of proper divisors, sigma(n) - n.
u64 s_of(u64 n);

}  // namespace aliquot
