#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schneider/prime.hpp"
#include "schneider/rational.hpp"
#include "schneider/rng.hpp"

namespace schneider {

/// Truncated p-adic integer: digits c_0..c_{N-1}, least significant first,
/// each in [0, p). The element is known modulo p^N and nothing more; every
/// operation states how much precision its result carries.
class PAdicInt {
public:
  PAdicInt(Prime p, std::vector<std::uint32_t> digits);

  static PAdicInt zero(Prime p, std::size_t precision);

  /// Embeds a p-integral rational (p ∤ den, v_p >= 0) to N digits: the unique
  /// x with x ≡ num·den^{-1} (mod p^N). Digits come out of the classical
  /// extraction loop: c = num·den^{-1} mod p; num = (num - c·den)/p.
  static PAdicInt from_rational(Prime p, const Rational& r, std::size_t precision);

  /// Digits of (v mod p^N).
  static PAdicInt from_value(Prime p, const Integer& v, std::size_t precision);

  const Prime& prime() const noexcept { return prime_; }
  std::size_t precision() const noexcept { return digits_.size(); }
  std::uint32_t digit(std::size_t i) const { return digits_[i]; }
  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }

  /// Membership in pZ_p is the testable condition c_0 = 0.
  bool in_pZp() const { return !digits_.empty() && digits_[0] == 0; }

  PAdicInt truncate(std::size_t m) const;

  /// min{i < N : c_i != 0}; nullopt when every known digit is zero (the
  /// element is indistinguishable from 0 at this precision).
  std::optional<std::size_t> valuation() const;

  Integer value() const;

  friend bool operator==(const PAdicInt& a, const PAdicInt& b) {
    return a.prime_ == b.prime_ && a.digits_ == b.digits_;
  }

private:
  Prime prime_;
  std::vector<std::uint32_t> digits_;
};

/// First index where the digits of x and y differ, scanning the
/// min(precision) shared window; nullopt if all comparable digits agree.
std::optional<long> distance_exponent(const PAdicInt& x, const PAdicInt& y);

/// |x - y|_p = p^{-v} as an exact rational; nullopt (indeterminate) when the
/// points agree on all comparable digits.
std::optional<Rational> padic_abs_distance(const PAdicInt& x, const PAdicInt& y);

/// w in [1, p^k) with u·w ≡ 1 (mod p^k). Throws NotAUnit if p | u.
Integer invert_unit(const Prime& p, const Integer& u, std::size_t k);

std::int64_t invert_unit_word(std::int64_t u, std::int64_t p);

/// Haar-random point of pZ_p at the given precision: c_0 = 0 and
/// c_1..c_{N-1} independent uniform on [0, p). With mu_p(pZ_p) = 1 every
/// residue class mod p^N inside pZ_p gets mass p^{1-N}.
PAdicInt haar_sample(Prime p, std::size_t precision, RandomStream& rng);

/// Same draws as haar_sample (digit by digit, in index order) but returns the
/// value form directly; used by the experiment loops.
Integer haar_value(Prime p, std::size_t precision, RandomStream& rng);

}  // namespace schneider
