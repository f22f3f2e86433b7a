#include "schneider/dimension.hpp"

#include <cmath>
#include <vector>

namespace schneider {

const char* to_string(DimResult::Formula f) {
  switch (f) {
    case DimResult::Formula::One: return "one";
    case DimResult::Formula::SAlpha: return "s_alpha";
    case DimResult::Formula::SM: return "s_M";
    case DimResult::Formula::Zero: return "zero";
  }
  return "?";
}

// residual in the series normalization: |(p-1) p^{-alpha s} p^{-s}/(1-p^{-s}) - 1|
static double series_residual(double p, double alpha, double s) {
  const double lp = std::log(p);
  const double q = std::exp(-s * lp);
  return std::abs((p - 1.0) * std::exp(-alpha * s * lp) * q / (1.0 - q) - 1.0);
}

DimResult solve_s(const Prime& prime, double alpha) {
  if (!(alpha > 0) || std::isinf(alpha)) fail(Errc::BadAlpha, "solve_s: alpha must be in (0, inf)");
  const double p = static_cast<double>(prime.value());
  const double lp = std::log(p);
  // g(s) = alpha s ln p + ln(p^s - 1) - ln(p-1), strictly increasing;
  // g(0+) = -inf, g(1) = alpha ln p > 0.
  const auto g = [&](double s) { return alpha * s * lp + std::log(std::expm1(s * lp)) - std::log(p - 1.0); };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  return {root, DimResult::Formula::SAlpha, alpha, series_residual(p, alpha, root)};
}

DimResult solve_sM(const Prime& prime, std::int64_t M) {
  if (M < 1) fail(Errc::InvalidSpec, "solve_sM: M must be >= 1");
  const double p = static_cast<double>(prime.value());
  const double lp = std::log(p);
  const auto G = [&](double s) {
    double sum = 0.0;
    for (std::int64_t i = M; i >= 1; --i) sum += std::exp(-static_cast<double>(i) * s * lp);
    return (p - 1.0) * sum - 1.0;
  };
  if (static_cast<double>(prime.value() - 1) * static_cast<double>(M) == 1.0) {
    return {0.0, DimResult::Formula::SM, 0.0, 0.0};  // (p-1)M = 1 forces s = 0
  }
  double lo = 0.0, hi = 1.0;  // G decreasing, G(0) > 0, G(1) = -p^{-M} < 0
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (G(mid) > 0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  return {root, DimResult::Formula::SM, 0.0, std::abs(G(root))};
}

static DimResult one() { return {1.0, DimResult::Formula::One, 0.0, 0.0}; }
static DimResult zero() { return {0.0, DimResult::Formula::Zero, 0.0, 0.0}; }

DimResult dim_E_sup(const Prime& p, const PsiSpec& psi) {
  const PsiClass c = psi.cls();
  switch (c.tag) {
    case PsiClass::Tag::SublinearZero: return one();
    case PsiClass::Tag::LinearLimit: return solve_s(p, c.alpha);
    case PsiClass::Tag::SuperlinearInfinity: return zero();
  }
  fail(Errc::UnclassifiedPsi, "dim_E_sup: bad class");
}

DimResult dim_E_inf(const Prime&, const PsiSpec& psi) {
  (void)psi.cls();  // validate classification
  return zero();
}

DimResult dim_E_inf_sup(const Prime& p, const PsiSpec& psi, double alpha1, double alpha2) {
  if (alpha1 < 0 || !(alpha1 < alpha2)) fail(Errc::BadLevels, "dim_E_inf_sup: need 0 <= alpha1 < alpha2");
  if (alpha1 > 0) return zero();
  if (std::isinf(alpha2)) {
    fail(Errc::UnspecifiedCase, "dim_E_inf_sup: the case alpha1 = 0, alpha2 = inf is not covered");
  }
  const PsiClass c = psi.cls();
  switch (c.tag) {
    case PsiClass::Tag::SublinearZero: return one();
    case PsiClass::Tag::LinearLimit: return solve_s(p, c.alpha * alpha2);
    case PsiClass::Tag::SuperlinearInfinity: return zero();
  }
  fail(Errc::UnclassifiedPsi, "dim_E_inf_sup: bad class");
}

DimResult dim_level_set(const Prime& p, const PsiSpec& psi, double alpha2) {
  if (!(alpha2 > 0) || std::isinf(alpha2)) fail(Errc::BadLevel, "dim_level_set: need 0 < alpha2 < inf");
  const PsiClass c = psi.cls();
  switch (c.tag) {
    case PsiClass::Tag::SublinearZero: return one();
    case PsiClass::Tag::LinearLimit: return solve_s(p, c.alpha * alpha2);
    case PsiClass::Tag::SuperlinearInfinity: return zero();
  }
  fail(Errc::UnclassifiedPsi, "dim_level_set: bad class");
}

DimResult dim_tau(double alpha) {
  if (std::isnan(alpha) || alpha < 0) fail(Errc::BadLevel, "dim_tau: alpha must be in [0, inf]");
  return std::isinf(alpha) ? one() : zero();
}

static Integer full_count(const Prime& p, std::int64_t M, std::size_t n) {
  Integer base = (p.value() - 1) * Integer(M);
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), n);
  return out;
}

double partition_sum(const Prime& p, std::int64_t M, std::size_t n, double s, PartitionMode mode) {
  if (M < 1 || n < 1) fail(Errc::InvalidSpec, "partition_sum: need M >= 1, n >= 1");
  const double pv = static_cast<double>(p.value());
  const double lp = std::log(pv);
  if (mode == PartitionMode::ClosedForm) {
    double g = 0.0;
    for (std::int64_t i = M; i >= 1; --i) g += std::exp(-static_cast<double>(i) * s * lp);
    g *= (pv - 1.0);
    return std::exp(-s * lp) * std::pow(g, static_cast<double>(n));
  }
  if (full_count(p, M, n) > 10000000) {
    fail(Errc::TooLarge, "partition_sum: enumeration guard of 1e7 cylinders exceeded");
  }
  // Walk all a-vectors; diam depends only on sum(a), and every vector carries
  // (p-1)^n cylinders, so accumulate an exponent histogram first.
  std::vector<std::int64_t> a(n, 1);
  std::vector<double> hist(static_cast<std::size_t>(M - 1) * n + 1, 0.0);
  std::int64_t sum = static_cast<std::int64_t>(n);
  for (;;) {
    hist[static_cast<std::size_t>(sum - static_cast<std::int64_t>(n))] += 1.0;
    std::size_t i = 0;
    while (i < n && a[i] == M) {
      sum -= M - 1;
      a[i] = 1;
      ++i;
    }
    if (i == n) break;
    ++a[i];
    ++sum;
  }
  const double b_factor = std::pow(pv - 1.0, static_cast<double>(n));
  double z = 0.0;
  for (std::size_t j = hist.size(); j-- > 0;) {
    const double total_a = static_cast<double>(n + j);
    z += hist[j] * b_factor * std::exp(-(1.0 + total_a) * s * lp);
  }
  return z;
}

PartitionResult partition_dimension(const Prime& p, std::int64_t M, std::size_t n, PartitionMode mode) {
  if (M < 1 || n < 1) fail(Errc::InvalidSpec, "partition_dimension: need M >= 1, n >= 1");
  const Integer count = full_count(p, M, n);
  if (mode == PartitionMode::Enumerate && count > 10000000) {
    fail(Errc::TooLarge, "partition_dimension: enumeration guard of 1e7 cylinders exceeded");
  }
  if (count == 1) return {0.0, count, n};  // a single cylinder: Z_n(0) = 1
  double lo = 0.0, hi = 1.0;  // Z decreasing; Z(0) = count > 1, Z(1) < 1
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (partition_sum(p, M, n, mid, mode) > 1.0 ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), count, n};
}

}  // namespace schneider
