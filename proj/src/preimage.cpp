#include "aliquot/preimage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aliquot/error.hpp"

namespace aliquot {

namespace {

void check_x(u64 x) {
  if (x < 2) throw ParameterError("x", "must be >= 2");
  if (x > kMaxN) throw ParameterError("x", "exceeds the supported cap of 10^12");
}

void check_unit_interval(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) throw ParameterError(name, "must lie in (0, 1)");
}

struct SplitTally {
  u64 divisible = 0;
  u64 not_divisible = 0;
};

}  // namespace

PreimageReport preimage_count(u64 x, const DigitSet& ds, double gamma, const SieveConfig& cfg) {
  check_x(x);
  check_unit_interval(gamma, "gamma");

  const PrimeTable pt = primes_for_sieve(x);
  const EllipsephicMatcher matches(ds);
  const auto tallies = map_segments<u64>(1, x + 1, pt, cfg, [&](const SieveSegment& seg) {
    u64 count = 0;
    const auto sigma = seg.sigma();
    u64 n = seg.lo();
    for (std::size_t i = 0; i < sigma.size(); ++i, ++n) count += matches(sigma[i] - n);
    return count;
  });
  u64 count = 0;
  for (u64 c : tallies) count += c;

  const double xd = static_cast<double>(x);
  return PreimageReport{
      .x = x,
      .digit_set = ds,
      .count = count,
      .density = static_cast<double>(count) / xd,
      .gamma = gamma,
      .bound = xd * std::exp(-std::pow(std::log(std::log(xd)), gamma)),
  };
}

KInterval k_interval(double log_log_x, const DigitSet& ds, double gamma) {
  check_unit_interval(gamma, "gamma");
  if (!(log_log_x > 0.0)) throw ParameterError("x", "log log x must be positive (x >= 3)");
  const double scale = std::log(static_cast<double>(ds.base()) / ds.size());
  const double lo = std::pow(log_log_x, gamma) / scale;
  return {lo, 2.0 * lo};
}

u64 choose_k_for_log_log(double log_log_x, const DigitSet& ds, double gamma) {
  const KInterval iv = k_interval(log_log_x, ds, gamma);
  const double k = std::max(1.0, std::ceil(iv.lo));
  if (k > iv.hi || k > 1e18) {
    throw ParameterError("x", "x too small for this (g, D, gamma): k interval [" +
                                  std::to_string(iv.lo) + ", " + std::to_string(iv.hi) +
                                  "] holds no positive integer");
  }
  return static_cast<u64>(k);
}

u64 choose_k(u64 x, const DigitSet& ds, double gamma) {
  if (x < 3) throw ParameterError("x", "must be >= 3");
  return choose_k_for_log_log(std::log(std::log(static_cast<double>(x))), ds, gamma);
}

SplitReport s1_s2_split(u64 x, const DigitSet& ds, u64 k, const SieveConfig& cfg) {
  check_x(x);
  if (k < 1) throw ParameterError("k", "must be >= 1");
  if (k > 1000) throw ParameterError("k", "must be <= 1000");

  const unsigned kk = static_cast<unsigned>(k);
  // Every sigma(n) fits in 64 bits, so an unrepresentable g^k divides none of them.
  const std::optional<u64> modulus = checked_pow(ds.base(), kk);
  const std::optional<u64> digit_power = checked_pow(ds.size(), kk);
  if (!digit_power) throw OverflowError("|D|^k exceeds 64-bit range");
  const u64 blocks = modulus ? x / *modulus : 0;
  const u128 wide_bound = static_cast<u128>(*digit_power) * blocks + *digit_power;
  if (wide_bound > UINT64_MAX) throw OverflowError("S1 bound exceeds 64-bit range");

  const PrimeTable pt = primes_for_sieve(x);
  const EllipsephicMatcher matches(ds);
  const auto tallies = map_segments<SplitTally>(1, x + 1, pt, cfg, [&](const SieveSegment& seg) {
    SplitTally t;
    const auto sigma = seg.sigma();
    u64 n = seg.lo();
    for (std::size_t i = 0; i < sigma.size(); ++i, ++n) {
      if (!matches(sigma[i] - n)) continue;
      if (modulus && sigma[i] % *modulus == 0) {
        ++t.divisible;
      } else {
        ++t.not_divisible;
      }
    }
    return t;
  });

  SplitReport report{.x = x, .digit_set = ds, .k = k, .s1 = 0, .s2 = 0,
                     .s1_bound = static_cast<u64>(wide_bound)};
  for (const auto& t : tallies) {
    report.s1 += t.divisible;
    report.s2 += t.not_divisible;
  }
  if (report.s1 > report.s1_bound) {
    throw std::logic_error("S1 = " + std::to_string(report.s1) + " exceeds its bound " +
                           std::to_string(report.s1_bound));
  }
  return report;
}

}  // namespace aliquot
