#include <random>

#include <gtest/gtest.h>

#include "aliquot/digit_set.hpp"
#include "aliquot/error.hpp"
#include "oracles.hpp"

namespace aliquot {
namespace {

DigitSet all_but(u64 g, unsigned missing) {
  std::vector<unsigned> d;
  for (unsigned i = 0; i < g; ++i) {
    if (i != missing) d.push_back(i);
  }
  return DigitSet(g, d);
}

std::vector<u64> brute_list(const DigitSet& ds, u64 x) {
  std::vector<u64> out;
  const auto allowed = ds.digits();
  for (u64 n = 1; n <= x; ++n) {
    if (oracle::digits_within(n, ds.base(), allowed)) out.push_back(n);
  }
  return out;
}

// several digit sets per base, with and without 0
std::vector<DigitSet> grid() {
  return {
      DigitSet(3, {0, 1}), DigitSet(3, {1, 2}), DigitSet(3, {2}),
      DigitSet(5, {0, 2, 4}), DigitSet(5, {1, 3}), DigitSet(5, {0, 1, 2, 3}),
      all_but(10, 9), DigitSet(10, {0, 1}), DigitSet(10, {1, 3, 5, 7, 9}), DigitSet(10, {7}),
  };
}

TEST(DigitSet, Validation) {
  EXPECT_THROW(DigitSet(2, {0}), ParameterError);
  EXPECT_THROW(DigitSet(10, {}), ParameterError);
  EXPECT_THROW(DigitSet(3, {0, 1, 2}), ParameterError);
  EXPECT_THROW(DigitSet(10, {10}), ParameterError);
  EXPECT_THROW(DigitSet(65, {1}), ParameterError);
  EXPECT_NO_THROW(DigitSet(64, {63}));
  const DigitSet ds(10, {8, 0, 1, 1});
  EXPECT_EQ(ds.size(), 3u);
  EXPECT_TRUE(ds.contains_zero());
  EXPECT_EQ(ds.digits(), (std::vector<unsigned>{0, 1, 8}));
}

TEST(DigitSet, ParseAndFormat) {
  const auto ds = DigitSet::parse("g=10;D=0,1,2,3,4,5,6,7,8");
  EXPECT_EQ(ds, all_but(10, 9));
  EXPECT_EQ(ds.str(), "g=10;D=0,1,2,3,4,5,6,7,8");
  EXPECT_EQ(DigitSet::parse(DigitSet(3, {1, 2}).str()), DigitSet(3, {1, 2}));
  for (const char* bad : {"", "g=10", "g=10;D=", "g=10;D=1,1", "g=10;D=2,1", "g=x;D=1",
                          "g=10;D=1,,2", "g=10,D=1", "g=10;D=0,1,2,3,4,5,6,7,8,9", "g=2;D=0",
                          "g=10;D=1a"}) {
    EXPECT_THROW(DigitSet::parse(bad), ParameterError) << bad;
  }
}

TEST(IsEllipsephic, Examples) {
  const auto no9 = all_but(10, 9);
  EXPECT_TRUE(is_ellipsephic(1288, no9));
  EXPECT_FALSE(is_ellipsephic(1989, no9));
  EXPECT_FALSE(is_ellipsephic(0, DigitSet(10, {1})));
  EXPECT_TRUE(is_ellipsephic(0, DigitSet(10, {0, 1})));
}

TEST(IsEllipsephic, MatcherAgreesWithPlainTest) {
  std::mt19937_64 rng(3);
  for (const auto& ds : grid()) {
    const EllipsephicMatcher m(ds);
    for (u64 n = 0; n < 20'000; ++n) ASSERT_EQ(m(n), is_ellipsephic(n, ds)) << ds.str() << " " << n;
    for (int i = 0; i < 20'000; ++i) {
      const u64 n = rng();
      ASSERT_EQ(m(n), is_ellipsephic(n, ds)) << ds.str() << " " << n;
    }
    for (u64 n : enumerate(ds, 1'000'000)) ASSERT_TRUE(m(n));
  }
}

TEST(CountUpTo, Examples) {
  const DigitSet d01(10, {0, 1});
  EXPECT_EQ(count_up_to(0, d01), 0u);
  EXPECT_EQ(count_up_to(99, d01), 3u);
  EXPECT_EQ(count_up_to(8, DigitSet(3, {1, 2})), 6u);
}

TEST(CountUpTo, AgreesWithBruteForceOnSmallX) {
  for (const auto& ds : grid()) {
    const auto allowed = ds.digits();
    u64 running = 0;
    for (u64 x = 1; x <= 5000; ++x) {
      running += oracle::digits_within(x, ds.base(), allowed);
      ASSERT_EQ(count_up_to(x, ds), running) << ds.str() << " x=" << x;
    }
  }
}

TEST(CountUpTo, AdjustedBlockIdentity) {
  for (const auto& ds : grid()) {
    const u64 size = ds.size();
    u64 power = 1;
    u64 geometric = 0;
    u64 block = 1;
    for (unsigned n = 1; n <= 6; ++n) {
      power *= size;
      geometric += power;
      block *= ds.base();
      const u64 expected = ds.contains_zero() ? power - 1 : geometric;
      EXPECT_EQ(count_up_to(block - 1, ds), expected) << ds.str() << " N=" << n;
    }
  }
}

TEST(CountUpTo, Monotone) {
  std::mt19937_64 rng(11);
  const DigitSet small(10, {0, 1, 5});
  const DigitSet big(10, {0, 1, 5, 7});
  u64 prev = 0;
  for (u64 x = 0; x < 1'000'000'000'000ULL; x += 1 + rng() % 50'000'000'000ULL) {
    const u64 c = count_up_to(x, small);
    ASSERT_GE(c, prev);
    ASSERT_LE(c, count_up_to(x, big));
    prev = c;
  }
}

TEST(CountInClass, Examples) {
  const DigitSet d01(10, {0, 1});
  EXPECT_EQ(count_in_class(99, d01, {3, 1}), 2u);
  EXPECT_EQ(count_in_class(12345, all_but(10, 9), {1, 0}), count_up_to(12345, all_but(10, 9)));
  EXPECT_THROW(count_in_class(10, d01, {3, 3}), ParameterError);
  EXPECT_THROW(count_in_class(10, d01, {0, 0}), ParameterError);
}

TEST(CountInClass, PartitionAndBrute) {
  for (const auto& ds : grid()) {
    const auto list = brute_list(ds, 200'000);
    for (u64 q : {1u, 2u, 3u, 7u, 10u, 13u}) {
      std::vector<u64> expected(q, 0);
      for (u64 n : list) ++expected[n % q];
      const auto got = class_counts(200'000, ds, q);
      ASSERT_EQ(got, expected) << ds.str() << " q=" << q;
      u64 sum = 0;
      for (u64 a = 0; a < q; ++a) {
        EXPECT_EQ(count_in_class(200'000, ds, {q, a}), expected[a]);
        sum += got[a];
      }
      EXPECT_EQ(sum, count_up_to(200'000, ds));
    }
  }
}

TEST(Enumerate, Examples) {
  const auto first = enumerate(DigitSet(10, {0, 1}), 101);
  EXPECT_EQ(first, (std::vector<u64>{1, 10, 11, 100, 101}));
  EXPECT_EQ(enumerate(DigitSet(10, {7}), 10'000), (std::vector<u64>{7, 77, 777, 7777}));
  EXPECT_TRUE(enumerate(DigitSet(10, {0}), 1000).empty());
  EXPECT_TRUE(enumerate(DigitSet(10, {5}), 4).empty());
  EXPECT_TRUE(enumerate(DigitSet(10, {5}), 0).empty());
}

TEST(Enumerate, AgreesWithDpAndBrute) {
  for (const auto& ds : grid()) {
    for (u64 x : {1u, 9u, 10u, 242u, 243u, 99'999u, 1'000'000u}) {
      const auto values = enumerate(ds, x);
      ASSERT_EQ(values.size(), count_up_to(x, ds)) << ds.str() << " x=" << x;
      for (std::size_t i = 1; i < values.size(); ++i) ASSERT_LT(values[i - 1], values[i]);
      if (x <= 100'000) ASSERT_EQ(values, brute_list(ds, x));
    }
  }
}

TEST(Enumerate, StreamNearTopOfRange) {
  const DigitSet ds(10, {1, 9});
  EllipsephicStream s(ds, UINT64_MAX);
  u64 last = 0;
  u64 count = 0;
  while (auto v = s.next()) {
    ASSERT_GT(*v, last);
    last = *v;
    ++count;
  }
  EXPECT_EQ(count, count_up_to(UINT64_MAX, ds));
  EXPECT_EQ(last, 11'999'999'999'999'999'999ULL);
}

TEST(EmsDeviation, Basics) {
  const auto r = ems_deviation(1000, all_but(10, 9), 1);
  ASSERT_EQ(r.deviation.size(), 1u);
  EXPECT_EQ(r.deviation[0], Rational(0));
  EXPECT_EQ(r.max_abs_deviation, Rational(0));
  EXPECT_TRUE(r.coprime_to_base);
}

TEST(EmsDeviation, MatchesBruteEnumeration) {
  struct Case {
    DigitSet ds;
    u64 q;
    bool coprime;
  };
  for (const auto& c : {Case{all_but(10, 9), 7, true}, Case{DigitSet(10, {0, 1}), 3, false}}) {
    const u64 x = 1'000'000;
    std::vector<u64> counts(c.q, 0);
    u64 total = 0;
    for (u64 n = 1; n <= x; ++n) {
      if (!oracle::digits_within(n, 10, c.ds.digits())) continue;
      ++counts[n % c.q];
      ++total;
    }
    const auto r = ems_deviation(x, c.ds, c.q);
    EXPECT_EQ(r.total, total);
    EXPECT_EQ(r.coprime_to_base, c.coprime);
    Rational worst;
    for (u64 a = 0; a < c.q; ++a) {
      const Rational expected(static_cast<std::int64_t>(counts[a] * c.q) - static_cast<std::int64_t>(total),
                              static_cast<std::int64_t>(c.q));
      EXPECT_EQ(r.deviation[a], expected) << a;
      if (expected.abs() > worst) worst = expected.abs();
    }
    EXPECT_EQ(r.max_abs_deviation, worst);
  }
}

}  // namespace
}  // namespace aliquot
