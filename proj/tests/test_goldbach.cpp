#include <cmath>

#include <gtest/gtest.h>

#include "aliquot/error.hpp"
#include "aliquot/goldbach.hpp"
#include "oracles.hpp"

namespace aliquot {
namespace {

u64 brute_pairs(const DigitSet& ds) {
  const u64 g = ds.base();
  u64 count = 0;
  for (u64 b1 = 0; b1 < g; ++b1) {
    for (u64 b2 = 0; b2 < g; ++b2) {
      if (oracle::gcd(b1 * b2, g) != 1) continue;
      bool hit = false;
      for (unsigned d : ds.digits()) hit = hit || (b1 + b2 + 1) % g == d;
      count += hit;
    }
  }
  return count;
}

double brute_r(u64 n) {
  double sum = 0.0;
  for (u64 p1 = 2; p1 + 2 <= n; ++p1) {
    const u64 p2 = n - 1 - p1;
    if (p2 < 2 || !oracle::is_prime(p1) || !oracle::is_prime(p2)) continue;
    sum += std::log(static_cast<double>(p1)) * std::log(static_cast<double>(p2));
  }
  return sum;
}

TEST(CofD, FullCoverageGivesBase) {
  // units mod 10 are odd, so b1 + b2 + 1 is always odd
  const DigitSet odds(10, {1, 3, 5, 7, 9});
  EXPECT_EQ(admissible_pair_count(odds), 16u);
  EXPECT_EQ(c_of_D(odds), Rational(10));
}

TEST(CofD, MissingOneInBaseTen) {
  const DigitSet no1(10, {0, 2, 3, 4, 5, 6, 7, 8, 9});
  EXPECT_EQ(admissible_pair_count(no1), 12u);
  EXPECT_EQ(c_of_D(no1), Rational(15, 2));
}

TEST(CofD, SingleMissingDigitAgainstBrute) {
  for (u64 g : {3u, 5u, 6u, 7u, 10u, 12u, 16u}) {
    u64 phi = 0;
    for (u64 j = 1; j <= g; ++j) phi += oracle::gcd(j, g) == 1;
    for (unsigned missing = 0; missing < g; ++missing) {
      std::vector<unsigned> d;
      for (unsigned i = 0; i < g; ++i) {
        if (i != missing) d.push_back(i);
      }
      const DigitSet ds(g, d);
      const u64 pairs = brute_pairs(ds);
      EXPECT_EQ(c_of_D(ds), Rational(static_cast<std::int64_t>(g * pairs),
                                     static_cast<std::int64_t>(phi * phi)));
      EXPECT_GE(c_of_D(ds), Rational(0));
      EXPECT_LE(c_of_D(ds), Rational(static_cast<std::int64_t>(g)));
      EXPECT_EQ(c_of_D(ds) == Rational(static_cast<std::int64_t>(g)), pairs == phi * phi);
      if (missing >= 1) EXPECT_GT(c_of_D(ds), Rational(0)) << g << " " << missing;
    }
  }
}

TEST(RWeight, SmallValues) {
  const auto pt = primes_up_to(100);
  for (u64 n = 0; n <= 4; ++n) EXPECT_EQ(r_weight(n, pt), 0.0);
  EXPECT_DOUBLE_EQ(r_weight(5, pt), std::log(2.0) * std::log(2.0));
  EXPECT_NEAR(r_weight(9, pt), 2.0 * std::log(3.0) * std::log(5.0), 1e-14);
  EXPECT_THROW(r_weight(101, pt), ParameterError);
}

TEST(RWeight, EvenNUsesTwo) {
  const u64 limit = 10'000;
  const auto pt = primes_up_to(limit);
  for (u64 n = 6; n <= limit; n += 2) {
    const double expected = oracle::is_prime(n - 3)
                                ? 2.0 * std::log(2.0) * std::log(static_cast<double>(n - 3))
                                : 0.0;
    ASSERT_NEAR(r_weight(n, pt), expected, 1e-12 * std::max(1.0, expected)) << n;
  }
}

TEST(RWeight, MatchesOrderedPairEnumeration) {
  const u64 limit = 3000;
  const auto pt = primes_up_to(limit);
  for (u64 n = 1; n <= limit; ++n) {
    const double expected = brute_r(n);
    ASSERT_NEAR(r_weight(n, pt), expected, 1e-12 * std::max(1.0, expected)) << n;
  }
}

TEST(SumOfTwoPrimes, AgreesWithWeight) {
  const auto pt = primes_up_to(20'000);
  for (u64 n = 1; n <= 20'000; ++n) ASSERT_EQ(is_sum_of_two_primes(n - 1, pt), r_weight(n, pt) > 0.0) << n;
}

TEST(GoldbachCount, BaseTenZeroOne) {
  const DigitSet d01(10, {0, 1});
  const auto pt = primes_up_to(1000);
  const auto r = goldbach_count(111, d01, pt);
  EXPECT_EQ(r.total, 7u);
  EXPECT_EQ(r.representable, 6u);
  EXPECT_EQ(r.block_exponent, 2u);
  EXPECT_EQ(r.c_of_d, c_of_D(d01));
  EXPECT_NEAR(r.main_term_at_full_block, r.c_of_d.to_double() * 400.0, 1e-9);
  double sum = 0.0;
  for (u64 n : {1, 10, 11, 100, 101, 110, 111}) {
    EXPECT_GE(r.weighted_sum, r_weight(n, pt));
    sum += r_weight(n, pt);
  }
  EXPECT_NEAR(r.weighted_sum, sum, 1e-12 * sum);
  EXPECT_THROW(goldbach_count(1001, d01, pt), ParameterError);
}

TEST(GoldbachCount, ThreadIndependent) {
  const DigitSet ds(10, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  const auto pt = primes_up_to(100'000);
  const auto a = goldbach_count(100'000, ds, pt, {.threads = 1});
  const auto b = goldbach_count(100'000, ds, pt, {.threads = 4});
  EXPECT_EQ(a.representable, b.representable);
  EXPECT_EQ(a.total, b.total);
  EXPECT_EQ(a.weighted_sum, b.weighted_sum);
  EXPECT_LE(a.representable, a.total);
}

}  // namespace
}  // namespace aliquot
