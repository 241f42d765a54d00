#pragma once

#include "aliquot/digit_set.hpp"
#include "aliquot/segment_pool.hpp"

namespace aliquot {

// #{n <= x : s(n) has every base-g digit in D}, with the upper bound
// x * exp(-(log log x)^gamma) it is compared against.
struct PreimageReport {
  u64 x;
  DigitSet digit_set;
  u64 count;
  double density;
  double gamma;
  double bound;
};

// n = 1 (s(1) = 0) counts iff 0 is an allowed digit.
// Requires x >= 2 and 0 < gamma < 1.
PreimageReport preimage_count(u64 x, const DigitSet& ds, double gamma, const SieveConfig& cfg = {});

// Admissible k range [(log log x)^gamma / log(g/|D|), 2 (log log x)^gamma / log(g/|D|)].
struct KInterval {
  double lo;
  double hi;
};

KInterval k_interval(double log_log_x, const DigitSet& ds, double gamma);

// Smallest integer k >= 1 in k_interval; throws ParameterError when the
// interval holds none. The first form needs x >= 3.
u64 choose_k(u64 x, const DigitSet& ds, double gamma);
u64 choose_k_for_log_log(double log_log_x, const DigitSet& ds, double gamma);

// Splits the preimage count by whether g^k divides sigma(n).
// s1 <= s1_bound = |D|^k floor(x / g^k) + |D|^k always holds.
struct SplitReport {
  u64 x;
  DigitSet digit_set;
  u64 k;
  u64 s1;
  u64 s2;
  u64 s1_bound;
};

SplitReport s1_s2_split(u64 x, const DigitSet& ds, u64 k, const SieveConfig& cfg = {});

}  // namespace aliquot
