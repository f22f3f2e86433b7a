#include "schneider/rational.hpp"

namespace schneider {

Integer pow_p(const Prime& p, std::uint64_t k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p.value()), k);
  return out;
}

long integer_valuation(const Prime& p, const Integer& n) {
  if (n == 0) fail(Errc::ZeroArgument, "integer_valuation: argument is zero");
  Integer m = abs(n);
  Integer q, r;
  long v = 0;
  const unsigned long pv = static_cast<unsigned long>(p.value());
  for (;;) {
    const unsigned long rem = mpz_tdiv_q_ui(q.get_mpz_t(), m.get_mpz_t(), pv);
    if (rem != 0) return v;
    ++v;
    m = q;
  }
}

long rational_valuation(const Prime& p, const Rational& r) {
  if (r == 0) fail(Errc::ZeroArgument, "rational_valuation: argument is zero");
  long v = 0;
  if (r.get_num() != 0) v += integer_valuation(p, r.get_num());
  if (r.get_den() != 1) v -= integer_valuation(p, r.get_den());
  return v;
}

bool p_divides_den(const Prime& p, const Rational& r) {
  return mpz_divisible_ui_p(r.get_den().get_mpz_t(), static_cast<unsigned long>(p.value())) != 0;
}

bool in_pZp(const Prime& p, const Rational& r) {
  if (r == 0) return true;
  return !p_divides_den(p, r) && rational_valuation(p, r) >= 1;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    fail(Errc::InvalidSpec, "parse_rational: malformed rational '" + text + "'");
  }
  if (r.get_den() == 0) fail(Errc::ZeroArgument, "parse_rational: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace schneider
