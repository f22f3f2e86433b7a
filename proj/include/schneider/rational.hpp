#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "schneider/prime.hpp"

namespace schneider {

using Integer = mpz_class;

/// Reduced arbitrary-precision fraction; mpq_class canonical form already
/// guarantees den > 0, gcd(num, den) = 1 and 0 = 0/1.
using Rational = mpq_class;

Integer pow_p(const Prime& p, std::uint64_t k);

/// Exponent of the largest power of p dividing n. Requires n != 0.
long integer_valuation(const Prime& p, const Integer& n);

/// v_p(num) - v_p(den) by exact repeated division. Throws ZeroArgument on 0.
long rational_valuation(const Prime& p, const Rational& r);

bool p_divides_den(const Prime& p, const Rational& r);

/// r == 0 or (p does not divide den(r) and v_p(r) >= 1).
bool in_pZp(const Prime& p, const Rational& r);

/// Parses "num", "-num" or "num/den"; canonicalizes. Throws ZeroArgument on
/// zero denominator, InvalidSpec on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace schneider
