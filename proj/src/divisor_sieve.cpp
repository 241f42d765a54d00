#include "aliquot/divisor_sieve.hpp"

#include <atomic>
#include <string>

#include "aliquot/error.hpp"

namespace aliquot {

bool PrimeTable::contains(u64 n) const {
  if (n > limit_) throw ParameterError("n", "beyond prime table limit " + std::to_string(limit_));
  if (n < 2) return false;
  if (n == 2) return true;
  if ((n & 1) == 0) return false;
  return !odd_composite_[n / 2];
}

PrimeTable primes_up_to(u64 limit) {
  if (limit > PrimeTable::kMaxLimit) {
    throw ResourceError("prime table limit " + std::to_string(limit) + " exceeds memory cap " +
                        std::to_string(PrimeTable::kMaxLimit));
  }
  PrimeTable pt;
  pt.limit_ = limit;
  if (limit < 2) return pt;
  pt.odd_composite_.assign(limit / 2 + 1, false);
  pt.odd_composite_[0] = true;  // 1
  for (u64 p = 3; p * p <= limit; p += 2) {
    if (pt.odd_composite_[p / 2]) continue;
    for (u64 m = p * p; m <= limit; m += 2 * p) pt.odd_composite_[m / 2] = true;
  }
  pt.primes_.push_back(2);
  for (u64 n = 3; n <= limit; n += 2) {
    if (!pt.odd_composite_[n / 2]) pt.primes_.push_back(n);
  }
  return pt;
}

namespace {

std::atomic<u64> g_segments_built{0};

// Exact division by an odd prime via its inverse mod 2^64: for any r,
// p | r iff r * inv <= (2^64 - 1) / p, and then r / p == r * inv.
struct OddDivisor {
  u64 inv;
  u64 bound;

  explicit OddDivisor(u64 p) : bound(UINT64_MAX / p) {
    u64 x = p;  // Newton iteration; p*p == 1 mod 8 seeds 3 correct bits
    for (int i = 0; i < 5; ++i) x *= 2 - p * x;
    inv = x;
  }

  bool divides(u64 r, u64& quotient) const {
    quotient = r * inv;
    return quotient <= bound;
  }
};

u64 checked_mul(u64 a, u64 b) {
  if (b != 0 && a > UINT64_MAX / b) throw OverflowError("sigma exceeds 64-bit range");
  return a * b;
}

}  // namespace

SieveSegment sieve_range(u64 lo, u64 hi, const PrimeTable& pt) {
  if (lo < 1) throw ParameterError("lo", "must be >= 1");
  if (hi <= lo) throw ParameterError("hi", "must be > lo");
  if (hi - 1 > kMaxN) throw ParameterError("hi", "exceeds the supported cap of 10^12 + 1");
  const u64 top = hi - 1;
  if (static_cast<u128>(pt.limit()) * pt.limit() < top) {
    throw ParameterError("pt", "prime table limit " + std::to_string(pt.limit()) +
                                   " is below sqrt(hi - 1)");
  }

  g_segments_built.fetch_add(1, std::memory_order_relaxed);
  const std::size_t len = hi - lo;
  SieveSegment seg;
  seg.lo_ = lo;
  seg.hi_ = hi;
  seg.sigma_.assign(len, 1);
  seg.omega_.assign(len, 0);
  std::vector<u64> rest(len);
  for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;

  auto& sigma = seg.sigma_;
  auto& omega = seg.omega_;

  // p = 2: strip with shifts
  for (u64 j = round_up(lo, 2) - lo; j < len; j += 2) {
    u64 r = rest[j];
    int e = __builtin_ctzll(r);
    rest[j] = r >> e;
    sigma[j] = (u64{2} << e) - 1;
    omega[j] = 1;
  }

  for (u64 p : pt.primes()) {
    if (p == 2) continue;
    if (p * p > top) break;
    const OddDivisor div(p);
    for (u64 j = round_up(lo, p) - lo; j < len; j += p) {
      u64 r = rest[j] * div.inv;  // exact: p | rest[j]
      u64 pk = p;
      u64 term = 1 + p;
      u64 q;
      while (div.divides(r, q)) {
        r = q;
        pk *= p;
        term += pk;
      }
      rest[j] = r;
      sigma[j] = checked_mul(sigma[j], term);
      ++omega[j];
    }
  }

  for (std::size_t j = 0; j < len; ++j) {
    if (rest[j] > 1) {
      sigma[j] = checked_mul(sigma[j], rest[j] + 1);
      ++omega[j];
    }
  }
  return seg;
}

u64 segments_built() noexcept { return g_segments_built.load(std::memory_order_relaxed); }

u64 sigma_naive(u64 n) {
  if (n == 0) throw ParameterError("n", "must be >= 1");
  u64 sum = 0;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      sum += d;
      if (d != n / d) sum += n / d;
    }
  }
  return sum;
}

u64 s_of(u64 n) {
  if (n == 0) throw ParameterError("n", "must be >= 1");
  return sigma_naive(n) - n;
}

}  // namespace aliquot
