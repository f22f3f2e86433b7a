#pragma once

#include <cstdint>

#include "schneider/prime.hpp"
#include "schneider/psi.hpp"
#include "schneider/rational.hpp"

namespace schneider {

/// A Hausdorff-dimension answer: the value in [0,1], which closed form
/// produced it, and the residual of the defining equation when a root was
/// solved for.
struct DimResult {
  enum class Formula { One, SAlpha, SM, Zero };
  double value;
  Formula formula;
  double alpha = 0.0;    // the alpha fed to the Moran equation, when SAlpha
  double residual = 0.0; // |sum (p-1) p^{-(n+alpha)s} - 1| at the root
};

const char* to_string(DimResult::Formula f);

/// Unique s in (0,1) with p^{alpha s}(p^s - 1) = p - 1, equivalently
/// sum_{n>=1} (p-1) p^{-(n+alpha)s} = 1. The left side is strictly
/// increasing in s, so bisection converges unconditionally; absolute
/// tolerance 1e-12. alpha must be positive and finite (the boundary cases
/// are handled by the spectrum functions).
DimResult solve_s(const Prime& p, double alpha);

/// Unique root in [0,1) of (p-1) sum_{i=1}^{M} p^{-is} = 1, the dimension of
/// the bounded-digit set; s = 0 exactly when (p-1)M = 1.
DimResult solve_sM(const Prime& p, std::int64_t M);

/// dim of the limsup-level-1 set: 1 / s(alpha) / 0 by the class of psi.
DimResult dim_E_sup(const Prime& p, const PsiSpec& psi);

/// dim of the liminf-level-1 and limit-level-1 sets: always 0.
DimResult dim_E_inf(const Prime& p, const PsiSpec& psi);

/// dim of {liminf a_n/psi = alpha1, limsup a_n/psi = alpha2}. alpha2 may be
/// +infinity. alpha1 > 0 gives 0; alpha1 = 0, alpha2 < inf dispatches on the
/// class of psi (s(alpha*alpha2) in the linear case). alpha1 = 0 with
/// alpha2 = inf is not covered by the theorems: UnspecifiedCase.
DimResult dim_E_inf_sup(const Prime& p, const PsiSpec& psi, double alpha1, double alpha2);

/// dim of {limsup a_n/psi = alpha2}, 0 < alpha2 < inf.
DimResult dim_level_set(const Prime& p, const PsiSpec& psi, double alpha2);

/// Spectrum of the convergence exponent: 1 iff alpha = inf, else 0.
DimResult dim_tau(double alpha);

enum class PartitionMode {
  Enumerate,   // ground truth: walk every admissible digit vector
  ClosedForm,  // Z_n(s) = p^{-s} ((p-1) sum_{i<=M} p^{-is})^n
};

struct PartitionResult {
  double s_n;              // root of Z_n(s) = 1
  Integer cylinder_count;  // ((p-1)M)^n
  std::size_t order;
};

/// Partition-function dimension estimate over order-n cylinders with digits
/// a_i in [1, M]: bisects sum diam^s = 1. Enumerate mode is guarded at 1e7
/// cylinders.
PartitionResult partition_dimension(const Prime& p, std::int64_t M, std::size_t n, PartitionMode mode);

/// Z_n(s) itself, for oracle comparisons between the two modes.
double partition_sum(const Prime& p, std::int64_t M, std::size_t n, double s, PartitionMode mode);

}  // namespace schneider
