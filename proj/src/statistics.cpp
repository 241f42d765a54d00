#include "aliquot/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aliquot/error.hpp"

namespace aliquot {

namespace {

constexpr u64 kSmallestSampled = 16;

struct OmegaTally {
  u64 exceptional = 0;
  u64 skipped = 0;
  u64 omega_sum = 0;
  u64 omega_square_sum = 0;
};

}  // namespace

OmegaStats omega_s_stats(u64 x, double epsilon, const SieveConfig& cfg) {
  if (x < 100) throw ParameterError("x", "must be >= 100");
  if (x > kMaxOmegaStatsX) {
    throw ResourceError("omegastats x above " + std::to_string(kMaxOmegaStatsX));
  }
  if (!(epsilon > 0.0)) throw ParameterError("epsilon", "must be positive");

  // Pass 1: s(n) for every n <= x.
  std::vector<std::uint32_t> s_values(x + 1, 0);
  {
    const PrimeTable pt = primes_for_sieve(x);
    const auto maxima = map_segments<u64>(1, x + 1, pt, cfg, [&](const SieveSegment& seg) {
      u64 hi = 0;
      for (u64 n = seg.lo(); n < seg.hi(); ++n) {
        const u64 s = seg.s_at(n);
        s_values[n] = static_cast<std::uint32_t>(s);
        hi = std::max(hi, s);
      }
      return hi;
    });
    if (*std::max_element(maxima.begin(), maxima.end()) > UINT32_MAX) {
      throw OverflowError("s(n) exceeds 32-bit range");
    }
  }
  const u64 s_max = *std::max_element(s_values.begin(), s_values.end());

  // Pass 2: omega over [1, s_max].
  std::vector<std::uint8_t> omega(s_max + 1, 0);
  if (s_max >= 1) {
    const PrimeTable pt = primes_for_sieve(s_max);
    map_segments<int>(1, s_max + 1, pt, cfg, [&](const SieveSegment& seg) {
      std::copy(seg.omega().begin(), seg.omega().end(), omega.begin() + seg.lo());
      return 0;
    });
  }

  // Pass 3: tallies, folded in chunk order.
  const u64 chunk = cfg.segment_size == 0 ? 1 : cfg.segment_size;
  const std::size_t chunks = static_cast<std::size_t>((x + chunk - 1) / chunk);
  const auto tallies = parallel_map<OmegaTally>(chunks, cfg.resolved_threads(), [&](std::size_t c) {
    OmegaTally t;
    const u64 lo = 1 + c * chunk;
    const u64 hi = std::min(x + 1, lo + chunk);
    for (u64 n = lo; n < hi; ++n) {
      const u64 s = s_values[n];
      if (s < kSmallestSampled) {
        ++t.skipped;
        continue;
      }
      const u64 w = omega[s];
      const double llog = std::log(std::log(static_cast<double>(s)));
      t.exceptional += std::abs(static_cast<double>(w) - llog) > epsilon * llog;
      t.omega_sum += w;
      t.omega_square_sum += w * w;
    }
    return t;
  });

  OmegaStats out{.x = x, .epsilon = epsilon, .exceptional = 0, .skipped = 0, .sampled = 0,
                 .omega_sum = 0, .omega_square_sum = 0, .mean = 0.0, .variance = 0.0};
  for (const auto& t : tallies) {
    out.exceptional += t.exceptional;
    out.skipped += t.skipped;
    out.omega_sum += t.omega_sum;
    out.omega_square_sum += t.omega_square_sum;
  }
  out.sampled = x - out.skipped;
  if (out.sampled > 0) {
    const double count = static_cast<double>(out.sampled);
    out.mean = static_cast<double>(out.omega_sum) / count;
  }
  if (out.sampled > 1) {
    // exact integer numerator: N * sum(w^2) - (sum w)^2
    const u128 sq = static_cast<u128>(out.sampled) * out.omega_square_sum;
    const u128 lin = static_cast<u128>(out.omega_sum) * out.omega_sum;
    const double count = static_cast<double>(out.sampled);
    out.variance = static_cast<double>(sq - lin) / (count * (count - 1.0));
  }
  return out;
}

ResidueCounts residue_counts(u64 x, u64 p, const SieveConfig& cfg) {
  if (!is_prime(p)) throw ParameterError("p", std::to_string(p) + " is not prime");
  if (x < 4) throw ParameterError("x", "must be >= 4");
  if (x > kMaxN) throw ParameterError("x", "exceeds the supported cap of 10^12");
  if (p > 10'000'000) throw ResourceError("p above 10^7");

  const PrimeTable pt = primes_for_sieve(x);
  const auto tallies =
      map_segments<std::vector<u64>>(1, x + 1, pt, cfg, [&](const SieveSegment& seg) {
        std::vector<u64> counts(p, 0);
        for (u64 n = std::max<u64>(seg.lo(), 2); n < seg.hi(); ++n) {
          const u64 sigma = seg.sigma_at(n);
          if (sigma == n + 1) continue;  // prime
          ++counts[(sigma - n) % p];
        }
        return counts;
      });

  ResidueCounts out{.x = x, .p = p, .counts = std::vector<u64>(p, 0), .composite_total = 0};
  for (const auto& t : tallies) {
    for (u64 a = 0; a < p; ++a) out.counts[a] += t[a];
  }
  for (u64 c : out.counts) out.composite_total += c;
  return out;
}

}  // namespace aliquot
