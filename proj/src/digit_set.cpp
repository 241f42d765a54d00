#include "aliquot/digit_set.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "aliquot/error.hpp"

namespace aliquot {

namespace {

constexpr u64 kMaxModulus = 10'000'000;

std::vector<unsigned> base_digits_msd_first(u64 x, u64 base) {
  std::vector<unsigned> out;
  do {
    out.push_back(static_cast<unsigned>(x % base));
    x /= base;
  } while (x > 0);
  std::reverse(out.begin(), out.end());
  return out;
}

u64 parse_uint(std::string_view text, const char* what) {
  u64 value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParameterError("digits", std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

DigitSet::DigitSet(u64 base, const std::vector<unsigned>& digits) : base_(base), mask_(0) {
  if (base < 3) throw ParameterError("base", "must be >= 3");
  if (base > kMaxBase) throw ParameterError("base", "must be <= " + std::to_string(kMaxBase));
  for (unsigned d : digits) {
    if (d >= base) {
      throw ParameterError("digits", "digit " + std::to_string(d) + " is not below base " +
                                         std::to_string(base));
    }
    mask_ |= std::uint64_t{1} << d;
  }
  if (mask_ == 0) throw ParameterError("digits", "digit set must be nonempty");
  const std::uint64_t full = base == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << base) - 1;
  if (mask_ == full) throw ParameterError("digits", "digit set must be a proper subset");
}

DigitSet DigitSet::parse(std::string_view text) {
  auto semi = text.find(';');
  if (!text.starts_with("g=") || semi == std::string_view::npos ||
      text.substr(semi + 1, 2) != "D=") {
    throw ParameterError("digits", "expected \"g=<int>;D=<d0>,<d1>,...\", got '" +
                                       std::string(text) + "'");
  }
  u64 base = parse_uint(text.substr(2, semi - 2), "base");
  std::string_view list = text.substr(semi + 3);
  std::vector<unsigned> digits;
  while (true) {
    auto comma = list.find(',');
    u64 d = parse_uint(list.substr(0, comma), "digit");
    if (!digits.empty() && d <= digits.back()) {
      throw ParameterError("digits", "digits must be strictly increasing");
    }
    if (d > 1000) throw ParameterError("digits", "digit out of range");
    digits.push_back(static_cast<unsigned>(d));
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
  }
  return DigitSet(base, digits);
}

std::string DigitSet::str() const {
  std::string out = "g=" + std::to_string(base_) + ";D=";
  bool first = true;
  for (unsigned d : digits()) {
    if (!first) out += ',';
    out += std::to_string(d);
    first = false;
  }
  return out;
}

std::vector<unsigned> DigitSet::digits() const {
  std::vector<unsigned> out;
  for (unsigned d = 0; d < base_; ++d) {
    if (allows(d)) out.push_back(d);
  }
  return out;
}

void ClassQuery::validate() const {
  if (modulus < 1) throw ParameterError("q", "modulus must be >= 1");
  if (residue >= modulus) throw ParameterError("a", "residue must be < modulus");
}

bool is_ellipsephic(u64 n, const DigitSet& ds) {
  const u64 g = ds.base();
  do {
    if (!ds.allows(n % g)) return false;
    n /= g;
  } while (n > 0);
  return true;
}

EllipsephicMatcher::EllipsephicMatcher(const DigitSet& ds) : chunk_(1) {
  constexpr u64 kTableCap = u64{1} << 16;
  unsigned width = 0;
  while (chunk_ * ds.base() <= kTableCap) {
    chunk_ *= ds.base();
    ++width;
  }
  full_.assign(chunk_, 0);
  top_.assign(chunk_, 0);
  for (u64 v = 0; v < chunk_; ++v) {
    top_[v] = is_ellipsephic(v, ds);
    bool ok = true;
    u64 w = v;
    for (unsigned i = 0; i < width && ok; ++i) {
      ok = ds.allows(w % ds.base());
      w /= ds.base();
    }
    full_[v] = ok;
  }
}

std::vector<u64> class_counts(u64 x, const DigitSet& ds, u64 q) {
  if (q < 1) throw ParameterError("q", "modulus must be >= 1");
  if (q > kMaxModulus) throw ResourceError("modulus above " + std::to_string(kMaxModulus));
  std::vector<u64> free(q, 0);
  if (x == 0) return free;

  const u64 g = ds.base();
  const std::vector<unsigned> allowed = ds.digits();
  const std::vector<unsigned> xd = base_digits_msd_first(x, g);

  // Three kinds of prefix: `free` (started, already below x's prefix; by
  // residue), `lead` (all zeros, already below x's prefix) and `tight`
  // (equal to x's prefix). x's leading digit is nonzero, so after the first
  // position a live tight prefix is always started.
  u64 lead = 0;
  bool tight = true;
  u64 tight_residue = 0;
  std::vector<u64> next(q);
  for (std::size_t i = 0; i < xd.size(); ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (u64 r = 0; r < q; ++r) {
      if (free[r] == 0) continue;
      const u64 shifted = (r * g) % q;
      for (unsigned d : allowed) next[(shifted + d) % q] += free[r];
    }
    for (unsigned d : allowed) {
      if (d != 0) next[d % q] += lead;
    }
    if (tight) {
      for (unsigned d : allowed) {
        if (d >= xd[i]) break;
        if (i == 0 && d == 0) continue;
        next[(tight_residue * g + d) % q] += 1;
      }
      if (i == 0 && xd[i] > 0) lead += 1;  // leading zero below x's top digit
      if (ds.allows(xd[i])) {
        tight_residue = (tight_residue * g + xd[i]) % q;
      } else {
        tight = false;
      }
    }
    free.swap(next);
  }
  if (tight) free[tight_residue] += 1;
  return free;
}

u64 count_up_to(u64 x, const DigitSet& ds) { return class_counts(x, ds, 1)[0]; }

u64 count_in_class(u64 x, const DigitSet& ds, const ClassQuery& cq) {
  cq.validate();
  return class_counts(x, ds, cq.modulus)[cq.residue];
}

EllipsephicStream::EllipsephicStream(const DigitSet& ds, u64 x)
    : base_(ds.base()), limit_(x), digits_(ds.digits()), first_lead_(0) {
  while (first_lead_ < digits_.size() && digits_[first_lead_] == 0) ++first_lead_;
  done_ = first_lead_ == digits_.size() || !start_length(1);
}

bool EllipsephicStream::start_length(std::size_t length) {
  if (length > base_digits_msd_first(limit_, base_).size()) return false;
  index_.assign(length, 0);
  index_[0] = first_lead_;
  return current_value() <= limit_;
}

u128 EllipsephicStream::current_value() const {
  u128 v = 0;
  for (std::size_t i : index_) v = v * base_ + digits_[i];
  return v;
}

std::optional<u64> EllipsephicStream::next() {
  if (done_) return std::nullopt;
  const u128 wide = current_value();
  if (wide > limit_) {
    done_ = true;
    return std::nullopt;
  }
  const u64 value = static_cast<u64>(wide);
  // odometer increment, least significant position first
  std::size_t pos = index_.size();
  while (pos > 0) {
    --pos;
    if (index_[pos] + 1 < digits_.size()) {
      ++index_[pos];
      break;
    }
    if (pos == 0) {
      done_ = !start_length(index_.size() + 1);
      return value;
    }
    index_[pos] = 0;
  }
  if (current_value() > limit_) done_ = true;
  return value;
}

std::vector<u64> enumerate(const DigitSet& ds, u64 x) {
  std::vector<u64> out;
  EllipsephicStream stream(ds, x);
  while (auto v = stream.next()) out.push_back(*v);
  return out;
}

EmsDeviation ems_deviation(u64 x, const DigitSet& ds, u64 q) {
  if (q < 1) throw ParameterError("q", "modulus must be >= 1");
  EmsDeviation out;
  out.x = x;
  out.modulus = q;
  out.class_count = class_counts(x, ds, q);
  for (u64 c : out.class_count) out.total += c;
  out.deviation.reserve(q);
  for (u64 c : out.class_count) {
    const __int128 diff = static_cast<__int128>(c) * q - static_cast<__int128>(out.total);
    __int128 g = q;
    for (__int128 a = diff < 0 ? -diff : diff; a != 0;) {
      __int128 t = g % a;
      g = a;
      a = t;
    }
    if (diff / g > INT64_MAX || diff / g < -INT64_MAX) throw OverflowError("deviation numerator");
    Rational dev(static_cast<std::int64_t>(diff / g), static_cast<std::int64_t>(q / g));
    if (dev.abs() > out.max_abs_deviation) out.max_abs_deviation = dev.abs();
    out.deviation.push_back(dev);
  }
  const u64 g = ds.base();
  out.coprime_to_base = gcd(q, g * (g - 1)) == 1;
  return out;
}

}  // namespace aliquot
