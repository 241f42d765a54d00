#include "aliquot/goldbach.hpp"

#include <cmath>
#include <string>

#include "aliquot/error.hpp"

namespace aliquot {

namespace {

void require_table(const PrimeTable& pt, u64 n) {
  if (pt.limit() < n) {
    throw ParameterError("pt", "prime table limit " + std::to_string(pt.limit()) + " is below " +
                                   std::to_string(n));
  }
}

struct GoldbachTally {
  u64 representable = 0;
  double weighted_sum = 0.0;
};

}  // namespace

u64 admissible_pair_count(const DigitSet& ds) {
  const u64 g = ds.base();
  u64 count = 0;
  for (u64 b1 = 0; b1 < g; ++b1) {
    if (gcd(b1, g) != 1) continue;
    for (u64 b2 = 0; b2 < g; ++b2) {
      if (gcd(b2, g) != 1) continue;
      count += ds.allows((b1 + b2 + 1) % g);
    }
  }
  return count;
}

Rational c_of_D(const DigitSet& ds) {
  const u64 g = ds.base();
  const u64 phi = totient(g);
  return Rational(static_cast<std::int64_t>(g * admissible_pair_count(ds)),
                  static_cast<std::int64_t>(phi * phi));
}

double r_weight(u64 n, const PrimeTable& pt) {
  require_table(pt, n);
  if (n < 5) return 0.0;
  const u64 m = n - 1;
  if (m % 2 == 1) {
    // an odd sum needs the prime 2
    return pt.contains(m - 2) ? 2.0 * std::log(2.0) * std::log(static_cast<double>(m - 2)) : 0.0;
  }
  double sum = 0.0;
  for (u64 p : pt.primes()) {
    if (2 * p > m) break;
    const u64 q = m - p;
    if (!pt.contains(q)) continue;
    const double term = std::log(static_cast<double>(p)) * std::log(static_cast<double>(q));
    sum += p == q ? term : 2.0 * term;
  }
  return sum;
}

bool is_sum_of_two_primes(u64 m, const PrimeTable& pt) {
  require_table(pt, m);
  if (m < 4) return false;
  if (m % 2 == 1) return pt.contains(m - 2);
  for (u64 p : pt.primes()) {
    if (2 * p > m) break;
    if (pt.contains(m - p)) return true;
  }
  return false;
}

GoldbachReport goldbach_count(u64 x, const DigitSet& ds, const PrimeTable& pt,
                              const SieveConfig& cfg) {
  require_table(pt, x);
  const std::vector<u64> values = enumerate(ds, x);

  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (values.size() + kChunk - 1) / kChunk;
  const auto tallies =
      parallel_map<GoldbachTally>(chunks, cfg.resolved_threads(), [&](std::size_t c) {
        GoldbachTally t;
        const std::size_t end = std::min(values.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
          const u64 n = values[i];
          t.representable += is_sum_of_two_primes(n - 1, pt);
          t.weighted_sum += r_weight(n, pt);
        }
        return t;
      });

  GoldbachReport out{.x = x, .digit_set = ds, .representable = 0, .total = values.size(),
                     .weighted_sum = 0.0, .c_of_d = c_of_D(ds), .block_exponent = 0,
                     .main_term_at_full_block = 0.0};
  for (const auto& t : tallies) {
    out.representable += t.representable;
    out.weighted_sum += t.weighted_sum;
  }
  const u64 g = ds.base();
  for (u64 power = g; power <= x; power *= g) {
    ++out.block_exponent;
    if (power > x / g) break;
  }
  out.main_term_at_full_block =
      out.c_of_d.to_double() *
      std::pow(static_cast<double>(g * ds.size()), static_cast<double>(out.block_exponent));
  return out;
}

}  // namespace aliquot
