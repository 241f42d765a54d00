#pragma once

#include "aliquot/segment_pool.hpp"

namespace aliquot {

// #{1 <= n <= x : g^k does not divide sigma(n)}.
// Throws ParameterError when g^k does not fit in 64 bits.
u64 key_lemma_count(u64 x, u64 g, u64 k, const SieveConfig& cfg = {});

// log x, log log x and log log log x. Parameter schedules only depend on x
// through these, which lets them be evaluated far beyond 64-bit x.
struct LogTower {
  double log_x;
  double log_log_x;
  double log_log_log_x;

  static LogTower of(u64 x);
  static LogTower from_log_log(double log_log_x);
};

struct ScheduleInputs {
  double alpha = 0.9;
  double alpha_prime = 0.2;
  double gamma = 0.5;
  double delta = 0.5;
  double A = 2.0;
};

// The evaluated schedule
//   ell = floor((1 - alpha) log3 x / log g)
//   t   = 1 - (log2 x)^(-alpha')
//   m   = floor(k / ell)
// with the side conditions it has to satisfy.
struct KeyLemmaParams {
  LogTower x;
  u64 g;
  u64 k;
  double alpha;
  double alpha_prime;
  double gamma;
  double delta;
  double A;
  u64 ell;
  double t;
  u64 m;
  double k_window_lo;         // 5 log3 x
  double k_window_hi;         // A (log2 x)^gamma
  bool k_in_window;
  bool m_within_bound;        // m <= (log2 x)^gamma; may fail below the asymptotic range
};

// Throws ParameterError if not 0 < alpha' < alpha < 1, gamma or delta is
// outside (0, alpha - alpha'), A <= 0, ell == 0 ("x too small") or k < ell.
KeyLemmaParams key_lemma_params(const LogTower& x, u64 g, u64 k, const ScheduleInputs& in = {});
KeyLemmaParams key_lemma_params(u64 x, u64 g, u64 k, const ScheduleInputs& in = {});

struct BoundSuite {
  double pollack;    // x / (log x)^(1/phi(q))
  double key_lemma;  // x exp(-(log log x)^delta)
  double main;       // x exp(-(log log x)^gamma)
  u64 phi_q;
};

// Requires x >= 3, q >= 1, gamma and delta in (0, 1).
BoundSuite bound_suite(u64 x, u64 q, double gamma, double delta);

// Same, with phi(q) supplied (for moduli such as g^k beyond the factorisation cap).
BoundSuite bound_suite_with_phi(u64 x, u64 phi_q, double gamma, double delta);

// The unique n = a b with gcd(a, b) = 1, a squarefree, every p | a has
// p == -1 (mod m), and every p | b has p^2 | b or p != -1 (mod m).
struct AbDecomposition {
  u64 n;
  u64 m;
  u64 a;
  u64 b;
};

// Requires 1 <= n <= 10^12 and m >= 2.
AbDecomposition ab_decompose(u64 n, u64 m);

}  // namespace aliquot
