#pragma once

#include <vector>

#include "aliquot/segment_pool.hpp"

namespace aliquot {

// omega(s(n)) over n <= x, skipping n with s(n) < 16 (where log log s(n) < 1).
struct OmegaStats {
  u64 x;
  double epsilon;
  u64 exceptional;  // |omega(s) - log log s| > epsilon log log s
  u64 skipped;
  u64 sampled;      // x - skipped
  u64 omega_sum;
  u64 omega_square_sum;
  double mean;
  double variance;  // sample variance, denominator sampled - 1
};

inline constexpr u64 kMaxOmegaStatsX = 20'000'000;

// Requires 100 <= x <= kMaxOmegaStatsX and epsilon > 0.
OmegaStats omega_s_stats(u64 x, double epsilon, const SieveConfig& cfg = {});

// s(n) mod p over composite n <= x (n > 1 and not prime).
struct ResidueCounts {
  u64 x;
  u64 p;
  std::vector<u64> counts;  // counts[a] = #{composite n <= x : s(n) == a mod p}
  u64 composite_total;
};

// Requires p prime and x >= 4.
ResidueCounts residue_counts(u64 x, u64 p, const SieveConfig& cfg = {});

}  // namespace aliquot
