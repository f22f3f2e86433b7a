#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "schneider/cf.hpp"
#include "schneider/psi.hpp"
#include "schneider/report.hpp"
#include "schneider/rng.hpp"

namespace schneider {

/// Descriptor of the Cantor constructions: the bounded-digit set E_M, the
/// set E_M(psi) with forced digits floor(psi(2^k))+1 at positions 2^k, and
/// F(n_k, alpha, M) with forced digits floor(alpha n_k)+1 at the n_k.
struct CantorSpec {
  enum class Kind { BoundedEM, EMPsi, FnkAlphaM };

  Prime prime;
  Kind kind;
  std::int64_t M;
  std::optional<PsiSpec> psi;       // EMPsi
  double alpha = 0.0;               // FnkAlphaM
  std::vector<std::uint64_t> nk;    // FnkAlphaM forced positions within budget
  bool nk_factorial = true;         // rule used to build nk
  std::uint64_t depth_budget = 0;

  static CantorSpec bounded_em(Prime p, std::int64_t M, std::uint64_t depth_budget);
  static CantorSpec em_psi(Prime p, std::int64_t M, PsiSpec psi, std::uint64_t depth_budget);
  /// Default index rule n_k = (k+1)!: n_0 = 1 and n_{k+1} = (k+2) n_k.
  static CantorSpec fnk(Prime p, std::int64_t M, double alpha, std::uint64_t depth_budget);
  /// Custom n_k; validated against n_0 = 1 and n_{k+1} >= (k+2) n_k.
  static CantorSpec fnk_custom(Prime p, std::int64_t M, double alpha, std::vector<std::uint64_t> nk,
                               std::uint64_t depth_budget);
};

/// Contiguous allowed a-range at one position: a singleton at forced
/// positions, [1, M] otherwise.
struct AllowedDigits {
  std::int64_t lo;
  std::int64_t hi;
  bool singleton() const { return lo == hi; }
  std::int64_t count() const { return hi - lo + 1; }
  bool contains(std::int64_t a) const { return lo <= a && a <= hi; }
};

bool is_marked(const CantorSpec& spec, std::uint64_t n);
std::int64_t forced_digit_at(const CantorSpec& spec, std::uint64_t n);
AllowedDigits constraint_at(const CantorSpec& spec, std::uint64_t n);
std::set<std::uint64_t> marked_positions(const CantorSpec& spec, std::uint64_t depth);

struct SamplePoint {
  std::vector<DigitPair> pairs;
  PAdicInt point;  // cylinder-centre embedding at precision 1 + sum a_i
};

/// Draws a uniformly over the allowed set and b uniformly over [1, p-1] at
/// each index, then embeds the resulting cylinder centre.
SamplePoint sample_point(const CantorSpec& spec, std::uint64_t depth, RandomStream& rng);

/// Number of order-depth cylinders consistent with the profile.
Integer cylinder_count(const CantorSpec& spec, std::uint64_t depth);

/// Streams all admissible order-depth cylinders. Guarded at 1e7.
void for_each_cylinder(const CantorSpec& spec, std::uint64_t depth,
                       const std::function<void(const Cylinder&)>& fn);

/// Exact total Haar measure of the depth-n cover:
/// prod_i (p-1) sum_{a in A_i} p^{-a}.
Rational cover_measure(const CantorSpec& spec, std::uint64_t depth);

/// Z_n(s) = p^{-s} prod_i (p-1) sum_{a in A_i} p^{-as} in product form
/// (positions are independent), and the root s_n of Z_n = 1.
double cover_partition_sum(const CantorSpec& spec, std::uint64_t depth, double s);
double cover_partition_root(const CantorSpec& spec, std::uint64_t depth);

/// Digit-deletion map from the proof machinery: keeps the subsequence of
/// pairs at unmarked (1-based) positions, order preserved.
std::vector<DigitPair> holder_map(std::span<const DigitPair> pairs, const std::set<std::uint64_t>& marked);

struct HolderOptions {
  std::size_t scan_kmax = 30;  // horizon for locating k_0 in the growth condition
};

/// Empirical check of the Hoelder inequality |f(x)-f(y)|_p <=
/// c |x-y|_p^{1/(1+eps)} for the digit-deletion map on E_M(psi), with
/// c = max(1, delta^{-1/(1+eps)}) and delta the minimal diameter of an
/// admissible order-n_0 cylinder (n_0 = 2^{k_0}, k_0 from scanning the
/// growth condition). Also reports the empirical exponent
/// log d(f(x),f(y)) / log d(x,y).
ExperimentReport holder_check(const CantorSpec& spec, double eps, std::uint64_t pair_count,
                              std::uint64_t depth, std::uint64_t seed, HolderOptions opt = {});

}  // namespace schneider
