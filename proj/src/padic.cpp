#include "schneider/padic.hpp"

namespace schneider {

PAdicInt::PAdicInt(Prime p, std::vector<std::uint32_t> digits) : prime_(p), digits_(std::move(digits)) {
  const auto pv = static_cast<std::uint32_t>(prime_.value());
  for (std::uint32_t c : digits_) {
    if (c >= pv) fail(Errc::InvalidSpec, "PAdicInt: digit out of [0, p)");
  }
}

PAdicInt PAdicInt::zero(Prime p, std::size_t precision) {
  return PAdicInt(p, std::vector<std::uint32_t>(precision, 0));
}

PAdicInt PAdicInt::from_rational(Prime p, const Rational& r, std::size_t precision) {
  if (p_divides_den(p, r)) {
    fail(Errc::DenominatorDivisible, "from_rational: p divides den(r)");
  }
  if (r != 0 && rational_valuation(p, r) < 0) {
    fail(Errc::NegativeValuation, "from_rational: v_p(r) < 0");
  }
  const unsigned long pv = static_cast<unsigned long>(p.value());
  Integer num = r.get_num();
  const Integer den = r.get_den();
  // den^{-1} mod p, fixed for the whole extraction.
  const std::int64_t den_inv = invert_unit_word(static_cast<std::int64_t>(mpz_fdiv_ui(den.get_mpz_t(), pv)), p.value());
  std::vector<std::uint32_t> digits(precision);
  for (std::size_t i = 0; i < precision; ++i) {
    const std::int64_t num_mod = static_cast<std::int64_t>(mpz_fdiv_ui(num.get_mpz_t(), pv));
    const std::uint32_t c = static_cast<std::uint32_t>((num_mod * den_inv) % p.value());
    digits[i] = c;
    if (c != 0) num -= c * den;
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), pv);
  }
  return PAdicInt(p, std::move(digits));
}

PAdicInt PAdicInt::from_value(Prime p, const Integer& v, std::size_t precision) {
  const unsigned long pv = static_cast<unsigned long>(p.value());
  Integer m = v;
  mpz_fdiv_r(m.get_mpz_t(), m.get_mpz_t(), pow_p(p, precision).get_mpz_t());
  std::vector<std::uint32_t> digits(precision);
  for (std::size_t i = 0; i < precision; ++i) {
    digits[i] = static_cast<std::uint32_t>(mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), pv));
  }
  return PAdicInt(p, std::move(digits));
}

PAdicInt PAdicInt::truncate(std::size_t m) const {
  if (m > precision()) fail(Errc::InsufficientPrecision, "truncate: beyond known precision");
  return PAdicInt(prime_, std::vector<std::uint32_t>(digits_.begin(), digits_.begin() + m));
}

std::optional<std::size_t> PAdicInt::valuation() const {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != 0) return i;
  }
  return std::nullopt;
}

Integer PAdicInt::value() const {
  Integer v = 0;
  if (prime_.value() == 2) {
    // Bit-packing fast path; digit i is bit i.
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i]) mpz_setbit(v.get_mpz_t(), i);
    }
    return v;
  }
  for (std::size_t i = digits_.size(); i-- > 0;) {
    v *= prime_.value();
    v += digits_[i];
  }
  return v;
}

std::optional<long> distance_exponent(const PAdicInt& x, const PAdicInt& y) {
  if (x.prime() != y.prime()) fail(Errc::PrimeMismatch, "distance: different primes");
  const std::size_t n = std::min(x.precision(), y.precision());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.digit(i) != y.digit(i)) return static_cast<long>(i);
  }
  return std::nullopt;
}

std::optional<Rational> padic_abs_distance(const PAdicInt& x, const PAdicInt& y) {
  const auto v = distance_exponent(x, y);
  if (!v) return std::nullopt;
  Rational d(Integer(1), pow_p(x.prime(), static_cast<std::uint64_t>(*v)));
  d.canonicalize();
  return d;
}

Integer invert_unit(const Prime& p, const Integer& u, std::size_t k) {
  if (k < 1) fail(Errc::InvalidSpec, "invert_unit: k < 1");
  if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p.value()))) {
    fail(Errc::NotAUnit, "invert_unit: p divides u");
  }
  const Integer modulus = pow_p(p, k);
  Integer w;
  if (mpz_invert(w.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    fail(Errc::NotAUnit, "invert_unit: not invertible");
  }
  return w;  // mpz_invert returns a representative in [1, p^k)
}

std::int64_t invert_unit_word(std::int64_t u, std::int64_t p) {
  u %= p;
  if (u < 0) u += p;
  if (u == 0) fail(Errc::NotAUnit, "invert_unit_word: p divides u");
  // extended Euclid on (u, p)
  std::int64_t r0 = u, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    const std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  s0 %= p;
  if (s0 < 0) s0 += p;
  return s0;
}

PAdicInt haar_sample(Prime p, std::size_t precision, RandomStream& rng) {
  if (precision < 1) fail(Errc::InvalidSpec, "haar_sample: precision must be >= 1");
  std::vector<std::uint32_t> digits(precision);
  digits[0] = 0;
  const auto pv = static_cast<std::uint64_t>(p.value());
  for (std::size_t i = 1; i < precision; ++i) {
    digits[i] = static_cast<std::uint32_t>(rng.below(pv));
  }
  return PAdicInt(p, std::move(digits));
}

Integer haar_value(Prime p, std::size_t precision, RandomStream& rng) {
  if (precision < 1) fail(Errc::InvalidSpec, "haar_value: precision must be >= 1");
  const auto pv = static_cast<std::uint64_t>(p.value());
  Integer v = 0;
  if (p.value() == 2) {
    for (std::size_t i = 1; i < precision; ++i) {
      if (rng.below(2) != 0) mpz_setbit(v.get_mpz_t(), i);
    }
    return v;
  }
  std::vector<std::uint32_t> digits(precision, 0);
  for (std::size_t i = 1; i < precision; ++i) {
    digits[i] = static_cast<std::uint32_t>(rng.below(pv));
  }
  for (std::size_t i = precision; i-- > 1;) {
    v *= p.value();
    v += digits[i];
  }
  v *= p.value();  // c_0 = 0
  return v;
}

}  // namespace schneider
