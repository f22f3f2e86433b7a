#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schneider/prime.hpp"
#include "schneider/report.hpp"

namespace schneider {

/// Shared experiment knobs. precision 0 lets each experiment size its own
/// digit budget; threads 0 defers to SCHNEIDER_LAB_THREADS / hardware.
struct StatsOptions {
  std::size_t precision = 0;
  unsigned threads = 0;
};

/// Upper tail of the chi-square distribution with dof degrees of freedom.
double chi_square_pvalue(double stat, double dof);

/// sum_{k>=1} k^{-t} (p-1) p^{-k}, truncated once the geometric tail bound
/// drops below 1e-12.
double exact_inverse_power_mean(const Prime& p, double t);

/// Law of the first digit pair under Haar measure: empirical P(a_1 = k)
/// against (p-1)p^{-k}, the tail P(a_1 >= k) against p^{1-k}, and b_1
/// against uniform on [1, p-1]. Criteria: every cell within 3 binomial
/// sigma, chi-square p-value > 0.01.
ExperimentReport digit_law_experiment(Prime p, std::uint64_t samples, std::uint64_t seed,
                                      StatsOptions opt = {});

/// Joint law of (a_1, a_{1+lag}) against the product of its marginals
/// (chi-square on a tail-truncated table), and the same for b digits.
/// lag 0 is degenerate and reported as skipped.
ExperimentReport independence_experiment(Prime p, std::uint64_t samples, std::uint64_t lag,
                                         std::uint64_t seed, StatsOptions opt = {});

enum class BirkhoffKind { MeanA, InversePower };

/// Orbit average of f(a_n) over fresh Haar samples, compared with the exact
/// integral sum_k f(k)(p-1)p^{-k}: f = id gives p/(p-1), f = k^{-t} the
/// inverse-power series. Criterion: within 1%.
ExperimentReport birkhoff_experiment(Prime p, BirkhoffKind kind, double t, std::uint64_t orbit_len,
                                     std::uint64_t samples, std::uint64_t seed, StatsOptions opt = {});

/// Finite-horizon view of the a.s. law limsup a_n / log n = 1/log p.
/// Per sample reports the scaling ratio M_N = (max_{2<=n<=N} a_n)/log N,
/// whose median must land in [0.8, 1.6]/log p, plus Borel-Cantelli counts
/// #{n <= N : a_n >= ceil(m log_p n)} for m in {0.5, 0.8, 1.2, 1.5} against
/// their exact expectations (3 sigma). The pointwise max of a_n/log n is
/// reported as an auxiliary statistic only: it converges to the running
/// supremum, not the limsup, and has no finite target.
ExperimentReport limsup_scaling_experiment(Prime p, std::uint64_t horizon, std::uint64_t samples,
                                           std::uint64_t seed, StatsOptions opt = {});

/// Convergence-exponent classification of a digit sequence. Partial sums
/// S_H(s) = sum_{n<=H} a_n^{-s} on the grid; a grid point is "stabilized"
/// when the dyadic increment S_H - S_{H/2} either falls below 1e-6 or decays
/// versus S_{H/2} - S_{H/4} by ratio <= 0.97. Infinite when no grid point
/// stabilizes, else Finite(smallest stabilized s).
struct ConvergenceExponentEstimate {
  std::vector<double> grid;
  std::vector<double> partial_sums;  // at the full horizon, one per grid s
  bool finite = false;
  double alpha_hat = 0.0;
};

ConvergenceExponentEstimate convergence_exponent(std::span<const double> digits,
                                                 std::span<const double> grid, std::size_t horizon);

std::vector<double> default_tau_grid();

/// Fraction of Haar samples classified Infinite (almost surely all of them).
ExperimentReport tau_classification_experiment(Prime p, std::uint64_t samples, std::uint64_t horizon,
                                               std::uint64_t seed, std::vector<double> grid = {},
                                               StatsOptions opt = {});

}  // namespace schneider
