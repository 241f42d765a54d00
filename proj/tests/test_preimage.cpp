#include <cmath>

#include <gtest/gtest.h>

#include "aliquot/divisor_sieve.hpp"
#include "aliquot/error.hpp"
#include "aliquot/preimage.hpp"
#include "oracles.hpp"

namespace aliquot {
namespace {

const DigitSet kNoNine(10, {0, 1, 2, 3, 4, 5, 6, 7, 8});

u64 brute_preimage(u64 x, const DigitSet& ds) {
  u64 count = 0;
  for (u64 n = 1; n <= x; ++n) count += oracle::digits_within(sigma_naive(n) - n, ds.base(), ds.digits());
  return count;
}

TEST(PreimageCount, SmallExamples) {
  EXPECT_EQ(preimage_count(30, kNoNine, 0.5).count, 29u);  // only s(15) = 9 fails
  EXPECT_EQ(preimage_count(30, kNoNine, 0.5).count, brute_preimage(30, kNoNine));
  // s(n) in {9, 99}: only n = 15 below 100
  EXPECT_EQ(preimage_count(100, DigitSet(10, {9}), 0.5).count, 1u);
  EXPECT_EQ(brute_preimage(100, DigitSet(10, {9})), 1u);
}

TEST(PreimageCount, AgreesWithBruteForce) {
  for (const auto& ds : {kNoNine, DigitSet(10, {0, 1}), DigitSet(3, {1, 2}), DigitSet(5, {0, 2})}) {
    for (u64 x : {2u, 17u, 1000u, 20'000u}) {
      ASSERT_EQ(preimage_count(x, ds, 0.5).count, brute_preimage(x, ds)) << ds.str() << " " << x;
    }
  }
}

TEST(PreimageCount, PrimesLowerBoundWhenOneAllowed) {
  const DigitSet ones(10, {1});
  for (u64 x : {10u, 1000u, 100'000u}) {
    const auto pt = primes_up_to(x);
    EXPECT_GE(preimage_count(x, ones, 0.5).count, pt.size());
  }
}

TEST(PreimageCount, NOneCountsOnlyWithZeroDigit) {
  // x = 2: n = 1 (s = 0), n = 2 (s = 1)
  EXPECT_EQ(preimage_count(2, DigitSet(10, {0}), 0.5).count, 1u);
  EXPECT_EQ(preimage_count(2, DigitSet(10, {1}), 0.5).count, 1u);
  EXPECT_EQ(preimage_count(2, DigitSet(10, {0, 1}), 0.5).count, 2u);
}

TEST(PreimageCount, ReportFields) {
  const auto r = preimage_count(10'000, kNoNine, 0.5);
  EXPECT_DOUBLE_EQ(r.density, static_cast<double>(r.count) / 10'000.0);
  EXPECT_NEAR(r.bound, 1e4 * std::exp(-std::sqrt(std::log(std::log(1e4)))), 1e-9 * r.bound);
  EXPECT_LE(r.count, r.x);
}

TEST(PreimageCount, Preconditions) {
  EXPECT_THROW(preimage_count(1, kNoNine, 0.5), ParameterError);
  EXPECT_THROW(preimage_count(100, kNoNine, 0.0), ParameterError);
  EXPECT_THROW(preimage_count(100, kNoNine, 1.0), ParameterError);
}

TEST(PreimageCount, ThreadAndSegmentIndependent) {
  const u64 ref = preimage_count(500'000, kNoNine, 0.5, {.segment_size = 1 << 20, .threads = 1}).count;
  EXPECT_EQ(preimage_count(500'000, kNoNine, 0.5, {.segment_size = 4099, .threads = 4}).count, ref);
  EXPECT_EQ(preimage_count(500'000, kNoNine, 0.5, {.segment_size = 65536, .threads = 2}).count, ref);
}

TEST(ChooseK, IntervalEndpoints) {
  const auto iv = k_interval(16.0, kNoNine, 0.5);
  EXPECT_NEAR(iv.lo, 4.0 / std::log(10.0 / 9.0), 1e-12);
  EXPECT_NEAR(iv.lo, 37.96, 0.01);
  EXPECT_NEAR(iv.hi, 75.93, 0.01);
  EXPECT_EQ(choose_k_for_log_log(16.0, kNoNine, 0.5), 38u);

  const auto single = k_interval(16.0, DigitSet(10, {3}), 0.5);
  const double ratio = std::log(10.0) / std::log(10.0 / 9.0);
  EXPECT_NEAR(iv.lo / single.lo, ratio, 1e-12);
  EXPECT_LT(single.hi, iv.hi);
}

TEST(ChooseK, TooSmall) {
  EXPECT_THROW(choose_k(3, DigitSet(10, {1}), 0.5), ParameterError);
  EXPECT_THROW(choose_k(2, kNoNine, 0.5), ParameterError);
  // [2.91, 5.82] for g/|D| = 10/9 at x = 3 holds the integer 3
  EXPECT_EQ(choose_k(3, kNoNine, 0.5), 3u);
}

TEST(ChooseK, DeskScale) {
  const double ll = std::log(std::log(1e6));
  EXPECT_EQ(choose_k(1'000'000, kNoNine, 0.5),
            static_cast<u64>(std::ceil(std::sqrt(ll) / std::log(10.0 / 9.0))));
}

TEST(Split, BruteForceAtTenThousand) {
  const auto r = s1_s2_split(10'000, kNoNine, 1);
  // frozen from a divisor-sum table: 10 | sigma(n) and s(n) free of the digit 9
  EXPECT_EQ(r.s1, 2617u);
  EXPECT_EQ(r.s2, 5052u);
  EXPECT_EQ(r.s1_bound, 9u * 1000u + 9u);

  const auto sigma = oracle::divisor_sum_table(10'000);
  u64 s1 = 0;
  u64 s2 = 0;
  for (u64 n = 1; n <= 10'000; ++n) {
    if (!oracle::digits_within(sigma[n] - n, 10, kNoNine.digits())) continue;
    (sigma[n] % 10 == 0 ? s1 : s2) += 1;
  }
  EXPECT_EQ(r.s1, s1);
  EXPECT_EQ(r.s2, s2);
}

TEST(Split, HugeModulusMakesS1Empty) {
  const u64 x = 50'000;
  const auto pre = preimage_count(x, kNoNine, 0.5);
  for (u64 k : {7u, 19u, 20u}) {
    const auto r = s1_s2_split(x, kNoNine, k);
    EXPECT_EQ(r.s1, 0u);
    EXPECT_EQ(r.s2, pre.count);
  }
}

TEST(Split, PartitionAndBound) {
  for (const auto& ds : {kNoNine, DigitSet(3, {0, 2}), DigitSet(5, {1, 2, 3})}) {
    for (u64 x : {1000u, 123'456u}) {
      const auto pre = preimage_count(x, ds, 0.5);
      for (u64 k = 1; k <= 4; ++k) {
        const auto r = s1_s2_split(x, ds, k);
        EXPECT_EQ(r.s1 + r.s2, pre.count);
        EXPECT_LE(r.s1, r.s1_bound);
      }
    }
  }
}

TEST(Split, Preconditions) {
  EXPECT_THROW(s1_s2_split(1, kNoNine, 1), ParameterError);
  EXPECT_THROW(s1_s2_split(100, kNoNine, 0), ParameterError);
  EXPECT_THROW(s1_s2_split(100, kNoNine, 21), OverflowError);  // 9^21 > 2^64
}

}  // namespace
}  // namespace aliquot
