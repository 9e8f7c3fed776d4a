#pragma once

#include <cstdint>

namespace xisum {

// Floating-point evaluation of xi(m) and xi2(m) through the simplified
// series. Substituting j = m-k turns both into sums over
//
//   t_k = m! / ((m-k)! m^k),   t_0 = 1,   t_k = t_{k-1} (m-k+1)/m,
//
// so xi(m) = sum_k t_k and xi2(m) = sum_k (k+1) t_k. Every t_k lies in
// [0,1] and the sequence is non-increasing, which rules out overflow and
// makes early termination sound. Terms are accumulated in ascending k with
// compensated summation; results are bit-reproducible for fixed inputs.

enum class SeriesMode { simplified, naive_log };

struct SeriesEval {
  std::int64_t m = 0;
  double value = 0.0;
  std::int64_t terms_used = 0;      // <= m+1
  double truncation_bound = 0.0;    // bound on (omitted tail) / value
  SeriesMode mode = SeriesMode::simplified;
};

// Below one ulp of any partial sum; effectively "sum to convergence".
inline constexpr double kDefaultRelCutoff = 1e-17;

// xi(m) = sum t_k. Stops once t_k < rel_cutoff * partial_sum; the omitted
// tail is at most t_k (m-k), recorded relative to the value returned.
// Requires m >= 1 and 0 < rel_cutoff < 1.
SeriesEval xi_float(std::int64_t m, double rel_cutoff = kDefaultRelCutoff);

// xi2(m) = sum (k+1) t_k, same contract; the tail bound carries the extra
// weight factor, (omitted tail) <= t_k (m-k) (m+1).
SeriesEval xi2_float(std::int64_t m, double rel_cutoff = kDefaultRelCutoff);

// Term-by-term evaluation of the defining binomial sum in log space,
//   exp(log C(m,k) + k log(k/m) + (m-k) log(1-k/m)),
// with 0 log 0 = 0. Kept as an accuracy and speed foil for the simplified
// path; always uses all m+1 terms.
SeriesEval xi_float_naive(std::int64_t m);

// |xi2_float(m) - xi_float(m) - m| / m at the default cutoff; the
// floating-point residual of the exact identity xi2(m) = xi(m) + m.
double identity_residual(std::int64_t m);

}  // namespace xisum
