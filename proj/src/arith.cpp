#include "aliquot/arith.hpp"

#include <array>
#include <algorithm>
#include <cmath>

#include "aliquot/error.hpp"

namespace aliquot {

u64 isqrt(u64 n) {
  constexpr u64 kRootCap = 0xFFFFFFFFULL;
  u64 r = std::min<u64>(static_cast<u64>(std::sqrt(static_cast<double>(n))), kRootCap);
  while (r > 0 && r * r > n) --r;
  while (r < kRootCap && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw ParameterError("n", "must be >= 1");
  if (n > kMaxN) throw ParameterError("n", "exceeds the supported cap of 10^12");
  std::vector<PrimePower> out;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (u64 p = 5; p * p <= n && p <= 1'000'000; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) {
    // n <= 10^12 and no factor <= 10^6 remains, so the cofactor is prime.
    out.push_back({n, 1});
  }
  return out;
}

u64 totient(u64 n) {
  u64 result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

}  // namespace aliquot
