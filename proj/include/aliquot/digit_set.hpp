#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aliquot/arith.hpp"
#include "aliquot/rational.hpp"

namespace aliquot {

// A base g >= 3 together with a nonempty proper subset D of {0, ..., g-1}.
class DigitSet {
 public:
  static constexpr u64 kMaxBase = 64;

  // Throws ParameterError unless 3 <= base <= kMaxBase and digits is a
  // nonempty proper subset of {0, ..., base-1}. Order and duplicates are ignored.
  DigitSet(u64 base, const std::vector<unsigned>& digits);

  // Grammar: "g=<int>;D=<d0>,<d1>,..." with strictly increasing digits.
  static DigitSet parse(std::string_view text);
  std::string str() const;

  u64 base() const noexcept { return base_; }
  std::uint64_t mask() const noexcept { return mask_; }
  unsigned size() const noexcept { return static_cast<unsigned>(__builtin_popcountll(mask_)); }
  bool allows(u64 digit) const noexcept { return digit < base_ && ((mask_ >> digit) & 1) != 0; }
  bool contains_zero() const noexcept { return (mask_ & 1) != 0; }
  std::vector<unsigned> digits() const;

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  u64 base_;
  std::uint64_t mask_;
};

struct ClassQuery {
  u64 modulus = 1;
  u64 residue = 0;

  // Throws ParameterError unless modulus >= 1 and residue < modulus.
  void validate() const;
};

// True iff every base-g digit of n is in D. n = 0 is the single digit 0.
bool is_ellipsephic(u64 n, const DigitSet& ds);

// Table-driven version of is_ellipsephic for hot loops: checks several digits
// per lookup.
class EllipsephicMatcher {
 public:
  explicit EllipsephicMatcher(const DigitSet& ds);

  bool operator()(u64 n) const {
    while (n >= chunk_) {
      if (!full_[n % chunk_]) return false;
      n /= chunk_;
    }
    return top_[n] != 0;
  }

 private:
  u64 chunk_;
  std::vector<std::uint8_t> full_;  // every digit of a zero-padded chunk allowed
  std::vector<std::uint8_t> top_;   // leading chunk, no padding
};

// #{1 <= n <= x : n ellipsephic}, by most-significant-digit DP.
u64 count_up_to(u64 x, const DigitSet& ds);

// #{1 <= n <= x : n ellipsephic, n == a (mod q)}.
u64 count_in_class(u64 x, const DigitSet& ds, const ClassQuery& cq);

// Entry a holds count_in_class(x, ds, {q, a}) for every a in [0, q).
std::vector<u64> class_counts(u64 x, const DigitSet& ds, u64 q);

// Ascending stream of the positive ellipsephic integers <= x.
class EllipsephicStream {
 public:
  EllipsephicStream(const DigitSet& ds, u64 x);

  std::optional<u64> next();

 private:
  bool start_length(std::size_t length);
  u128 current_value() const;

  u64 base_;
  u64 limit_;
  std::vector<unsigned> digits_;  // allowed digits, ascending
  std::size_t first_lead_;        // index of the smallest nonzero allowed digit
  std::vector<std::size_t> index_;
  bool done_ = false;
};

std::vector<u64> enumerate(const DigitSet& ds, u64 x);

struct EmsDeviation {
  u64 x = 0;
  u64 modulus = 1;
  u64 total = 0;                    // count_up_to(x)
  std::vector<u64> class_count;     // per residue a
  std::vector<Rational> deviation;  // class_count[a] - total / q
  Rational max_abs_deviation;
  bool coprime_to_base = false;  // gcd(q, g(g-1)) == 1
};

EmsDeviation ems_deviation(u64 x, const DigitSet& ds, u64 q);

}  // namespace aliquot
