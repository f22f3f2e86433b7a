#include "schneider/cf.hpp"

namespace schneider {

const char* to_string(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Terminated: return "Terminated";
    case ExpansionStatus::TailDetected: return "TailDetected";
    case ExpansionStatus::HorizonReached: return "HorizonReached";
    case ExpansionStatus::PrecisionExhausted: return "PrecisionExhausted";
    case ExpansionStatus::ZeroRemainder: return "ZeroRemainder";
  }
  return "?";
}

std::optional<std::pair<DigitPair, Rational>> step_rational(const Prime& p, const Rational& x) {
  if (x == 0) return std::nullopt;
  if (p_divides_den(p, x)) fail(Errc::NotInDomain, "step_rational: p divides den(x)");
  const long a = rational_valuation(p, x);
  if (a < 1) fail(Errc::NotInDomain, "step_rational: v_p(x) < 1");

  const unsigned long pv = static_cast<unsigned long>(p.value());
  Integer mprime = x.get_num();  // x = p^a * mprime / n with p coprime to mprime, n
  for (long i = 0; i < a; ++i) mpz_divexact_ui(mprime.get_mpz_t(), mprime.get_mpz_t(), pv);
  const Integer& n = x.get_den();

  const std::int64_t n_mod = static_cast<std::int64_t>(mpz_fdiv_ui(n.get_mpz_t(), pv));
  const std::int64_t m_inv = invert_unit_word(static_cast<std::int64_t>(mpz_fdiv_ui(mprime.get_mpz_t(), pv)), p.value());
  const std::int64_t b = (n_mod * m_inv) % p.value();  // nonzero: both factors are units

  Rational rem(n, mprime);
  rem.canonicalize();
  rem -= b;
  return std::make_pair(DigitPair{a, b}, rem);
}

Expansion expand_rational(const Prime& p, Rational x, std::uint64_t max_steps, std::uint64_t tail_window) {
  if (!in_pZp(p, x)) fail(Errc::NotInDomain, "expand_rational: x not in pZ_p");
  Expansion e{p, {}, ExpansionStatus::HorizonReached, std::nullopt};
  std::size_t run = 0;  // trailing (1, p-1) run length
  while (e.pairs.size() < max_steps) {
    auto step = step_rational(p, x);
    if (!step) {
      e.status = ExpansionStatus::Terminated;
      return e;
    }
    e.pairs.push_back(step->first);
    x = std::move(step->second);
    run = (step->first.a == 1 && step->first.b == p.value() - 1) ? run + 1 : 0;
    if (tail_window > 0 && run >= tail_window) {
      e.status = ExpansionStatus::TailDetected;
      e.tail_start = e.pairs.size() - run;
      return e;
    }
  }
  if (x == 0) e.status = ExpansionStatus::Terminated;
  return e;
}

PadicStep step_padic(const PAdicInt& x) {
  if (x.precision() == 0) return {PadicStep::Kind::PrecisionExhausted, {}, std::nullopt};
  if (!x.in_pZp()) fail(Errc::NotInPZp, "step_padic: c_0 != 0");
  const auto a_opt = x.valuation();
  if (!a_opt) return {PadicStep::Kind::ZeroRemainder, {}, std::nullopt};
  const std::size_t a = *a_opt;           // 1 <= a <= N-1
  const std::size_t k = x.precision() - a;  // >= 1
  const Prime& p = x.prime();

  // u = x / p^a, known mod p^k
  const PAdicInt u(p, std::vector<std::uint32_t>(x.digits().begin() + a, x.digits().end()));
  const Integer w = invert_unit(p, u.value(), k);
  const std::int64_t b = static_cast<std::int64_t>(mpz_fdiv_ui(w.get_mpz_t(), static_cast<unsigned long>(p.value())));
  PAdicInt rem = PAdicInt::from_value(p, w - b, k);
  return {PadicStep::Kind::Ok, DigitPair{static_cast<std::int64_t>(a), b}, std::move(rem)};
}

Expansion expand_padic(const PAdicInt& x, std::uint64_t max_steps) {
  Expansion e{x.prime(), {}, ExpansionStatus::HorizonReached, std::nullopt};
  if (x.precision() == 0) {
    e.status = ExpansionStatus::PrecisionExhausted;
    return e;
  }
  if (!x.in_pZp()) fail(Errc::NotInPZp, "expand_padic: x not in pZ_p");
  PAdicInt cur = x;
  while (e.pairs.size() < max_steps) {
    auto st = step_padic(cur);
    if (st.kind == PadicStep::Kind::ZeroRemainder) {
      e.status = ExpansionStatus::ZeroRemainder;
      return e;
    }
    if (st.kind == PadicStep::Kind::PrecisionExhausted) {
      e.status = ExpansionStatus::PrecisionExhausted;
      return e;
    }
    e.pairs.push_back(st.pair);
    cur = std::move(*st.remainder);
  }
  return e;
}

static void check_pairs(const Prime& p, std::span<const DigitPair> pairs) {
  for (const auto& d : pairs) {
    if (d.a < 1 || d.b < 1 || d.b > p.value() - 1) {
      fail(Errc::InvalidSpec, "digit pair out of range");
    }
  }
}

std::vector<Convergent> convergents(const Prime& p, std::span<const DigitPair> pairs) {
  if (pairs.empty()) fail(Errc::EmptyInput, "convergents: empty digit sequence");
  check_pairs(p, pairs);
  std::vector<Convergent> out;
  out.reserve(pairs.size());
  Integer P_prev = 0, Q_prev = 1;  // order 0
  Integer P = pow_p(p, static_cast<std::uint64_t>(pairs[0].a));
  Integer Q = pairs[0].b;
  std::int64_t exp_sum = pairs[0].a;
  out.push_back({P, Q, 1, exp_sum});
  for (std::size_t n = 1; n < pairs.size(); ++n) {
    const Integer pa = pow_p(p, static_cast<std::uint64_t>(pairs[n].a));
    Integer P_next = pairs[n].b * P + pa * P_prev;
    Integer Q_next = pairs[n].b * Q + pa * Q_prev;
    P_prev = std::move(P);
    Q_prev = std::move(Q);
    P = std::move(P_next);
    Q = std::move(Q_next);
    exp_sum += pairs[n].a;
    out.push_back({P, Q, n + 1, exp_sum});
  }
  return out;
}

Rational evaluate(const Prime& p, std::span<const DigitPair> pairs) {
  if (pairs.empty()) fail(Errc::EmptyInput, "evaluate: empty digit sequence");
  const auto conv = convergents(p, pairs);
  Rational r(conv.back().P, conv.back().Q);
  r.canonicalize();
  return r;
}

Rational Cylinder::radius() const {
  Rational r(Integer(1), pow_p(prime, static_cast<std::uint64_t>(radius_exp())));
  r.canonicalize();
  return r;
}

Rational Cylinder::measure() const {
  Rational r(Integer(1), pow_p(prime, static_cast<std::uint64_t>(measure_exp())));
  r.canonicalize();
  return r;
}

Cylinder cylinder(const Prime& p, std::span<const DigitPair> pairs) {
  if (pairs.empty()) return Cylinder{p, {}, Rational(0), 0};
  check_pairs(p, pairs);
  std::int64_t exp_sum = 0;
  for (const auto& d : pairs) exp_sum += d.a;
  return Cylinder{p, std::vector<DigitPair>(pairs.begin(), pairs.end()), evaluate(p, pairs), exp_sum};
}

bool cylinder_contains(const Cylinder& c, const PAdicInt& x) {
  if (x.prime() != c.prime) fail(Errc::PrimeMismatch, "cylinder_contains: different primes");
  const std::size_t need = static_cast<std::size_t>(c.radius_exp());
  if (x.precision() < need) {
    fail(Errc::InsufficientPrecision, "cylinder_contains: need " + std::to_string(need) + " digits of x");
  }
  const PAdicInt centre = PAdicInt::from_rational(c.prime, c.center, need);
  for (std::size_t i = 0; i < need; ++i) {
    if (x.digit(i) != centre.digit(i)) return false;
  }
  return true;
}

DigitStream::DigitStream(Prime p, Integer value, std::size_t precision)
    : prime_(p), num_(std::move(value)), den_(1), pk_(pow_p(p, precision)), k_(precision), state_(State::Running) {
  if (precision == 0) {
    state_ = State::PrecisionExhausted;
    return;
  }
  mpz_fdiv_r(num_.get_mpz_t(), num_.get_mpz_t(), pk_.get_mpz_t());
  if (mpz_fdiv_ui(num_.get_mpz_t(), static_cast<unsigned long>(p.value())) != 0) {
    fail(Errc::NotInPZp, "DigitStream: value not in pZ_p");
  }
}

std::optional<DigitPair> DigitStream::next() {
  if (state_ != State::Running) return std::nullopt;
  if (num_ == 0) {
    state_ = State::ZeroRemainder;
    return std::nullopt;
  }
  const std::int64_t pv = prime_.value();
  const unsigned long pu = static_cast<unsigned long>(pv);

  // a = v_p(A); A reduced mod p^k and nonzero, so a <= k-1.
  std::size_t a = 0;
  Integer u = num_;
  if (pv == 2) {
    a = mpz_scan1(u.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(u.get_mpz_t(), u.get_mpz_t(), a);
    mpz_tdiv_q_2exp(pk_.get_mpz_t(), pk_.get_mpz_t(), a);
  } else {
    while (mpz_divisible_ui_p(u.get_mpz_t(), pu)) {
      mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), pu);
      ++a;
    }
    for (std::size_t i = 0; i < a; ++i) mpz_divexact_ui(pk_.get_mpz_t(), pk_.get_mpz_t(), pu);
  }
  k_ -= a;

  const std::int64_t u_inv = invert_unit_word(static_cast<std::int64_t>(mpz_fdiv_ui(u.get_mpz_t(), pu)), pv);
  const std::int64_t b_mod = static_cast<std::int64_t>(mpz_fdiv_ui(den_.get_mpz_t(), pu));
  const std::int64_t b = (b_mod * u_inv) % pv;

  // T(A/B) = (B - b u)/u, then renormalize mod p^{k}
  Integer next_num = den_ - b * u;
  mpz_fdiv_r(next_num.get_mpz_t(), next_num.get_mpz_t(), pk_.get_mpz_t());
  mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), pk_.get_mpz_t());
  num_ = std::move(next_num);
  den_ = std::move(u);
  return DigitPair{static_cast<std::int64_t>(a), b};
}

}  // namespace schneider
