#pragma once

#include "aliquot/digit_set.hpp"
#include "aliquot/rational.hpp"
#include "aliquot/segment_pool.hpp"

namespace aliquot {

// #{(b1, b2) in [0, g)^2 : gcd(b1 b2, g) = 1, (b1 + b2 + 1) mod g in D}.
u64 admissible_pair_count(const DigitSet& ds);

// c(D) = g / phi(g)^2 * admissible_pair_count(ds), exactly.
Rational c_of_D(const DigitSet& ds);

// Sum over ordered prime pairs p1 + p2 + 1 = n of log p1 log p2.
// Requires pt.limit() >= n.
double r_weight(u64 n, const PrimeTable& pt);

// True iff m = p + q for primes p, q. Requires pt.limit() >= m.
bool is_sum_of_two_primes(u64 m, const PrimeTable& pt);

struct GoldbachReport {
  u64 x;
  DigitSet digit_set;
  u64 representable;  // ellipsephic n <= x with n - 1 a sum of two primes
  u64 total;          // ellipsephic n <= x
  double weighted_sum;
  Rational c_of_d;
  unsigned block_exponent;  // N = floor(log x / log g)
  // c(D) (g |D|)^N. Compares to the weighted sum over n <= g^N - 1,
  // not to the sum at x.
  double main_term_at_full_block;
};

// Requires pt.limit() >= x.
GoldbachReport goldbach_count(u64 x, const DigitSet& ds, const PrimeTable& pt,
                              const SieveConfig& cfg = {});

}  // namespace aliquot
