#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "schneider/padic.hpp"
#include "schneider/prime.hpp"
#include "schneider/rational.hpp"

namespace schneider {

/// One digit pair of the expansion: a >= 1 is the valuation jump, b is the
/// unit digit in [1, p-1].
struct DigitPair {
  std::int64_t a;
  std::int64_t b;
  friend bool operator==(const DigitPair&, const DigitPair&) = default;
};

enum class ExpansionStatus {
  Terminated,          // remainder hit 0 in exact rational arithmetic
  TailDetected,        // trailing run of (1, p-1) pairs reached the window
  HorizonReached,      // max_steps pairs produced
  PrecisionExhausted,  // no digits known at all (precision-0 input)
  ZeroRemainder,       // remainder indistinguishable from 0 at known precision
};

const char* to_string(ExpansionStatus s);

struct Expansion {
  Prime prime;
  std::vector<DigitPair> pairs;
  ExpansionStatus status;
  std::optional<std::size_t> tail_start;  // set when status == TailDetected
};

/// One application of the map T_p(x) = p^{a}/x - b on an exact rational.
/// Returns nullopt iff x = 0 (the expansion terminated). Writing
/// x = p^a m'/n with p coprime to m'n: a_1 = a, b_1 = n (m')^{-1} mod p in
/// [1, p-1], remainder = n/m' - b_1.
std::optional<std::pair<DigitPair, Rational>> step_rational(const Prime& p, const Rational& x);

/// Iterates step_rational. Terminated if the remainder hits 0; TailDetected
/// as soon as the last tail_window pairs all equal (1, p-1), with tail_start
/// the first index of the maximal trailing run (a heuristic for the
/// Bundschuh tail; 0 disables); HorizonReached otherwise.
Expansion expand_rational(const Prime& p, Rational x, std::uint64_t max_steps, std::uint64_t tail_window);

struct PadicStep {
  enum class Kind { Ok, ZeroRemainder, PrecisionExhausted };
  Kind kind;
  DigitPair pair{0, 0};
  std::optional<PAdicInt> remainder;
};

/// T_p at finite precision. With x = p^a u and u known mod p^{N-a}, the
/// remainder u^{-1} - b is known mod p^{N-a}: output precision is input
/// precision minus a, the exact information loss of dividing by p^a.
PadicStep step_padic(const PAdicInt& x);

/// Iterates step_padic until ZeroRemainder, PrecisionExhausted or max_steps;
/// at most N-1 pairs can come out of precision N.
Expansion expand_padic(const PAdicInt& x, std::uint64_t max_steps);

/// Convergent P_n/Q_n of a digit-pair prefix, with the running exponent sum
/// a_1 + ... + a_n it was built from.
struct Convergent {
  Integer P;
  Integer Q;
  std::size_t order;
  std::int64_t exponent_sum;
};

/// P_0 = 0, Q_0 = 1, P_1 = p^{a_1}, Q_1 = b_1,
/// P_n = b_n P_{n-1} + p^{a_n} P_{n-2}, likewise Q. Exact integers.
std::vector<Convergent> convergents(const Prime& p, std::span<const DigitPair> pairs);

/// Value of the finite continued fraction, in lowest terms.
Rational evaluate(const Prime& p, std::span<const DigitPair> pairs);

/// Order-n cylinder as a ball: centre P_n/Q_n, radius p^{-(1+sum a_i)},
/// Haar measure p^{-sum a_i}. The empty sequence gives the root cylinder
/// pZ_p (centre 0, radius p^{-1}, measure 1). Radius and measure are kept
/// as exponents; the rational accessors materialize them.
struct Cylinder {
  Prime prime;
  std::vector<DigitPair> pairs;
  Rational center;
  std::int64_t exponent_sum;

  std::int64_t radius_exp() const { return exponent_sum + 1; }
  std::int64_t measure_exp() const { return exponent_sum; }
  Rational radius() const;
  Rational measure() const;
};

Cylinder cylinder(const Prime& p, std::span<const DigitPair> pairs);

/// True iff |x - centre|_p <= radius, i.e. the first 1 + sum a_i digits of x
/// match the embedded centre. Requires that much precision of x.
bool cylinder_contains(const Cylinder& c, const PAdicInt& x);

/// Orbit digit iterator over a truncated value. Produces exactly the pairs
/// of expand_padic, but keeps the state as a fraction A/B (mod p^k, B a
/// unit): T(A/B) = (B - b u)/u with u = A/p^a, so no p-adic inverse mod p^k
/// is ever needed. This is the fast path for long Monte Carlo orbits.
class DigitStream {
public:
  enum class State { Running, ZeroRemainder, PrecisionExhausted };

  DigitStream(Prime p, Integer value, std::size_t precision);

  std::optional<DigitPair> next();
  State state() const noexcept { return state_; }
  std::size_t remaining_precision() const noexcept { return k_; }

private:
  Prime prime_;
  Integer num_;      // A, reduced into [0, p^k)
  Integer den_;      // B, unit mod p
  Integer pk_;       // p^k
  std::size_t k_;    // remaining precision
  State state_;
};

}  // namespace schneider
