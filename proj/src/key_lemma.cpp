#include "aliquot/key_lemma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aliquot/error.hpp"

namespace aliquot {

u64 key_lemma_count(u64 x, u64 g, u64 k, const SieveConfig& cfg) {
  if (x < 1) throw ParameterError("x", "must be >= 1");
  if (x > kMaxN) throw ParameterError("x", "exceeds the supported cap of 10^12");
  if (g < 3) throw ParameterError("base", "must be >= 3");
  if (k < 1) throw ParameterError("k", "must be >= 1");
  const auto modulus = k > 64 ? std::nullopt : checked_pow(g, static_cast<unsigned>(k));
  if (!modulus) throw ParameterError("k", "g^k exceeds 64-bit range");

  const PrimeTable pt = primes_for_sieve(x);
  const u64 q = *modulus;
  const auto tallies = map_segments<u64>(1, x + 1, pt, cfg, [q](const SieveSegment& seg) {
    u64 count = 0;
    for (u64 s : seg.sigma()) count += (s % q != 0);
    return count;
  });
  u64 count = 0;
  for (u64 c : tallies) count += c;
  return count;
}

LogTower LogTower::of(u64 x) {
  if (x < 3) throw ParameterError("x", "must be >= 3");
  const double l1 = std::log(static_cast<double>(x));
  const double l2 = std::log(l1);
  return {l1, l2, std::log(l2)};
}

LogTower LogTower::from_log_log(double log_log_x) {
  if (!(log_log_x > 0.0) || !std::isfinite(log_log_x)) {
    throw ParameterError("loglogx", "must be positive and finite");
  }
  return {std::exp(log_log_x), log_log_x, std::log(log_log_x)};
}

KeyLemmaParams key_lemma_params(const LogTower& x, u64 g, u64 k, const ScheduleInputs& in) {
  if (g < 3) throw ParameterError("base", "must be >= 3");
  if (!(in.alpha > 0.0 && in.alpha < 1.0)) throw ParameterError("alpha", "must lie in (0, 1)");
  if (!(in.alpha_prime > 0.0 && in.alpha_prime < in.alpha)) {
    throw ParameterError("alpha_prime", "must lie in (0, alpha)");
  }
  const double gap = in.alpha - in.alpha_prime;
  if (!(in.gamma > 0.0 && in.gamma < gap)) {
    throw ParameterError("gamma", "must lie in (0, alpha - alpha_prime)");
  }
  if (!(in.delta > 0.0 && in.delta < gap)) {
    throw ParameterError("delta", "must lie in (0, alpha - alpha_prime)");
  }
  if (!(in.A > 0.0)) throw ParameterError("A", "must be positive");

  const double ell_real = (1.0 - in.alpha) * x.log_log_log_x / std::log(static_cast<double>(g));
  if (!(ell_real >= 1.0)) {
    throw ParameterError("x", "x too small: ell = floor(" + std::to_string(ell_real) + ") < 1");
  }
  const u64 ell = static_cast<u64>(std::floor(ell_real));
  if (k < ell) {
    throw ParameterError("k", "must be >= ell = " + std::to_string(ell));
  }

  KeyLemmaParams p{
      .x = x,
      .g = g,
      .k = k,
      .alpha = in.alpha,
      .alpha_prime = in.alpha_prime,
      .gamma = in.gamma,
      .delta = in.delta,
      .A = in.A,
      .ell = ell,
      .t = 1.0 - std::pow(x.log_log_x, -in.alpha_prime),
      .m = k / ell,
      .k_window_lo = 5.0 * x.log_log_log_x,
      .k_window_hi = in.A * std::pow(x.log_log_x, in.gamma),
      .k_in_window = false,
      .m_within_bound = false,
  };
  if (!(p.t > 0.0 && p.t < 1.0)) throw ParameterError("x", "x too small: t must lie in (0, 1)");
  const double kd = static_cast<double>(k);
  p.k_in_window = kd >= p.k_window_lo && kd <= p.k_window_hi;
  p.m_within_bound = static_cast<double>(p.m) <= std::pow(x.log_log_x, in.gamma);
  if (p.m < 1 || p.m * p.ell > k) throw std::logic_error("schedule invariant m*ell <= k broken");
  return p;
}

KeyLemmaParams key_lemma_params(u64 x, u64 g, u64 k, const ScheduleInputs& in) {
  return key_lemma_params(LogTower::of(x), g, k, in);
}

BoundSuite bound_suite(u64 x, u64 q, double gamma, double delta) {
  if (x < 3) throw ParameterError("x", "must be >= 3");
  if (q < 1) throw ParameterError("q", "must be >= 1");
  return bound_suite_with_phi(x, totient(q), gamma, delta);
}

BoundSuite bound_suite_with_phi(u64 x, u64 phi, double gamma, double delta) {
  if (x < 3) throw ParameterError("x", "must be >= 3");
  if (phi < 1) throw ParameterError("q", "phi(q) must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma", "must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta", "must lie in (0, 1)");
  const double xd = static_cast<double>(x);
  const double lx = std::log(xd);
  const double llx = std::log(lx);
  return BoundSuite{
      .pollack = xd / std::pow(lx, 1.0 / static_cast<double>(phi)),
      .key_lemma = xd * std::exp(-std::pow(llx, delta)),
      .main = xd * std::exp(-std::pow(llx, gamma)),
      .phi_q = phi,
  };
}

AbDecomposition ab_decompose(u64 n, u64 m) {
  if (n < 1) throw ParameterError("n", "must be >= 1");
  if (m < 2) throw ParameterError("m", "must be >= 2");
  u64 a = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e == 1 && p % m == m - 1) a *= p;
  }
  const AbDecomposition d{.n = n, .m = m, .a = a, .b = n / a};

  // invariants
  bool ok = d.a * d.b == n && gcd(d.a, d.b) == 1;
  for (const auto& [p, e] : factorize(d.a)) ok = ok && e == 1 && p % m == m - 1;
  for (const auto& [p, e] : factorize(d.b)) ok = ok && (e >= 2 || p % m != m - 1);
  if (!ok) throw std::logic_error("ab_decompose invariant broken for n = " + std::to_string(n));
  return d;
}

}  // namespace aliquot
