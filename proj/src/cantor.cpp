#include "schneider/cantor.hpp"

#include <algorithm>
#include <cmath>

namespace schneider {

static void check_M(std::int64_t M) {
  if (M < 2) fail(Errc::InvalidSpec, "CantorSpec: M must be >= 2");
}

CantorSpec CantorSpec::bounded_em(Prime p, std::int64_t M, std::uint64_t depth_budget) {
  check_M(M);
  return {p, Kind::BoundedEM, M, std::nullopt, 0.0, {}, true, depth_budget};
}

CantorSpec CantorSpec::em_psi(Prime p, std::int64_t M, PsiSpec psi, std::uint64_t depth_budget) {
  check_M(M);
  return {p, Kind::EMPsi, M, std::move(psi), 0.0, {}, true, depth_budget};
}

CantorSpec CantorSpec::fnk(Prime p, std::int64_t M, double alpha, std::uint64_t depth_budget) {
  check_M(M);
  if (!(alpha > 0)) fail(Errc::InvalidSpec, "CantorSpec::fnk: alpha must be > 0");
  std::vector<std::uint64_t> nk;
  std::uint64_t n = 1;  // n_k = (k+1)!
  for (std::uint64_t k = 0; n <= depth_budget; ++k) {
    nk.push_back(n);
    if (n > depth_budget / (k + 2)) break;
    n *= (k + 2);
  }
  return {p, Kind::FnkAlphaM, M, std::nullopt, alpha, std::move(nk), true, depth_budget};
}

CantorSpec CantorSpec::fnk_custom(Prime p, std::int64_t M, double alpha, std::vector<std::uint64_t> nk,
                                  std::uint64_t depth_budget) {
  check_M(M);
  if (!(alpha > 0)) fail(Errc::InvalidSpec, "CantorSpec::fnk_custom: alpha must be > 0");
  if (nk.empty() || nk[0] != 1) fail(Errc::InvalidSpec, "CantorSpec::fnk_custom: n_0 must be 1");
  for (std::size_t k = 0; k + 1 < nk.size(); ++k) {
    if (nk[k + 1] < (k + 2) * nk[k]) {
      fail(Errc::InvalidSpec, "CantorSpec::fnk_custom: need n_{k+1} >= (k+2) n_k");
    }
  }
  return {p, Kind::FnkAlphaM, M, std::nullopt, alpha, std::move(nk), false, depth_budget};
}

static bool is_power_of_two_ge2(std::uint64_t n) { return n >= 2 && (n & (n - 1)) == 0; }

bool is_marked(const CantorSpec& spec, std::uint64_t n) {
  switch (spec.kind) {
    case CantorSpec::Kind::BoundedEM: return false;
    case CantorSpec::Kind::EMPsi: return is_power_of_two_ge2(n);  // m_k = 2^k, k >= 1
    case CantorSpec::Kind::FnkAlphaM:
      return std::binary_search(spec.nk.begin(), spec.nk.end(), n);
  }
  return false;
}

std::int64_t forced_digit_at(const CantorSpec& spec, std::uint64_t n) {
  if (spec.kind == CantorSpec::Kind::EMPsi) return spec.psi->forced_digit(n);
  // floor(alpha n) + 1
  return static_cast<std::int64_t>(std::floor(spec.alpha * static_cast<double>(n))) + 1;
}

AllowedDigits constraint_at(const CantorSpec& spec, std::uint64_t n) {
  if (n < 1) fail(Errc::InvalidSpec, "constraint_at: positions start at 1");
  if (is_marked(spec, n)) {
    const std::int64_t f = forced_digit_at(spec, n);
    return {f, f};
  }
  return {1, spec.M};
}

std::set<std::uint64_t> marked_positions(const CantorSpec& spec, std::uint64_t depth) {
  std::set<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    if (is_marked(spec, n)) out.insert(n);
  }
  return out;
}

SamplePoint sample_point(const CantorSpec& spec, std::uint64_t depth, RandomStream& rng) {
  if (depth > spec.depth_budget) fail(Errc::BudgetExceeded, "sample_point: depth exceeds budget");
  if (depth < 1) fail(Errc::InvalidSpec, "sample_point: depth must be >= 1");
  const std::int64_t p = spec.prime.value();
  std::vector<DigitPair> pairs;
  pairs.reserve(depth);
  std::int64_t exp_sum = 0;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const AllowedDigits allowed = constraint_at(spec, n);
    const std::int64_t a = allowed.lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(allowed.count())));
    const std::int64_t b = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p - 1)));
    pairs.push_back({a, b});
    exp_sum += a;
  }
  const auto conv = convergents(spec.prime, pairs);
  Rational centre(conv.back().P, conv.back().Q);
  centre.canonicalize();
  PAdicInt point = PAdicInt::from_rational(spec.prime, centre, static_cast<std::size_t>(exp_sum) + 1);
  return {std::move(pairs), std::move(point)};
}

Integer cylinder_count(const CantorSpec& spec, std::uint64_t depth) {
  Integer count = 1;
  for (std::uint64_t n = 1; n <= depth; ++n) count *= constraint_at(spec, n).count();
  Integer b_choices;
  mpz_ui_pow_ui(b_choices.get_mpz_t(), static_cast<unsigned long>(spec.prime.value() - 1), depth);
  return count * b_choices;
}

void for_each_cylinder(const CantorSpec& spec, std::uint64_t depth,
                       const std::function<void(const Cylinder&)>& fn) {
  if (depth < 1) fail(Errc::InvalidSpec, "for_each_cylinder: depth must be >= 1");
  if (cylinder_count(spec, depth) > 10000000) {
    fail(Errc::TooLarge, "for_each_cylinder: guard of 1e7 cylinders exceeded");
  }
  const std::int64_t p = spec.prime.value();
  std::vector<AllowedDigits> allowed;
  for (std::uint64_t n = 1; n <= depth; ++n) allowed.push_back(constraint_at(spec, n));
  std::vector<DigitPair> pairs(depth);
  for (std::uint64_t n = 0; n < depth; ++n) pairs[n] = {allowed[n].lo, 1};
  for (;;) {
    fn(cylinder(spec.prime, pairs));
    // odometer, last position fastest: b then a
    std::size_t i = depth;
    while (i-- > 0) {
      if (pairs[i].b < p - 1) {
        ++pairs[i].b;
        break;
      }
      pairs[i].b = 1;
      if (pairs[i].a < allowed[i].hi) {
        ++pairs[i].a;
        break;
      }
      pairs[i].a = allowed[i].lo;
      if (i == 0) return;
    }
  }
}

Rational cover_measure(const CantorSpec& spec, std::uint64_t depth) {
  Rational total = 1;
  const std::int64_t p = spec.prime.value();
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const AllowedDigits allowed = constraint_at(spec, n);
    Rational site = 0;
    for (std::int64_t a = allowed.lo; a <= allowed.hi; ++a) {
      Rational term(Integer(1), pow_p(spec.prime, static_cast<std::uint64_t>(a)));
      term.canonicalize();
      site += term;
    }
    total *= site * (p - 1);
  }
  return total;
}

double cover_partition_sum(const CantorSpec& spec, std::uint64_t depth, double s) {
  const double p = static_cast<double>(spec.prime.value());
  const double lp = std::log(p);
  double log_z = -s * lp;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const AllowedDigits allowed = constraint_at(spec, n);
    double site = 0.0;
    for (std::int64_t a = allowed.lo; a <= allowed.hi; ++a) {
      site += std::exp(-static_cast<double>(a) * s * lp);
    }
    log_z += std::log((p - 1.0) * site);
  }
  return std::exp(log_z);
}

double cover_partition_root(const CantorSpec& spec, std::uint64_t depth) {
  if (cover_partition_sum(spec, depth, 0.0) <= 1.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cover_partition_sum(spec, depth, mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<DigitPair> holder_map(std::span<const DigitPair> pairs, const std::set<std::uint64_t>& marked) {
  std::vector<DigitPair> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!marked.count(i + 1)) out.push_back(pairs[i]);
  }
  return out;
}

ExperimentReport holder_check(const CantorSpec& spec, double eps, std::uint64_t pair_count,
                              std::uint64_t depth, std::uint64_t seed, HolderOptions opt) {
  if (spec.kind != CantorSpec::Kind::EMPsi) fail(Errc::InvalidSpec, "holder_check: spec must be EMPsi");
  if (!(eps > 0)) fail(Errc::InvalidSpec, "holder_check: eps must be > 0");
  const PsiClass cls = spec.psi->cls();
  if (cls.tag != PsiClass::Tag::SublinearZero) {
    fail(Errc::InvalidSpec, "holder_check: psi must be sublinear");
  }
  const double bound = 1.0 / (1.0 + eps);

  // Locate k_0: the growth condition
  //   1 - (sum_{i<=k} floor(psi(2^i)) + M + k + floor(psi(2^k))) / 2^k >= 1/(1+eps)
  // must hold from k_0 on (checked over the scan horizon).
  std::int64_t k0 = -1;
  {
    std::vector<bool> ok(opt.scan_kmax + 1, false);
    double running = 0.0;
    for (std::size_t k = 1; k <= opt.scan_kmax; ++k) {
      const std::uint64_t mk = std::uint64_t{1} << k;
      const double fk = static_cast<double>(spec.psi->forced_digit(mk) - 1);  // floor(psi(m_k))
      running += fk;
      const double lhs = 1.0 - (running + static_cast<double>(spec.M) + static_cast<double>(k) + fk) /
                                   static_cast<double>(mk);
      ok[k] = lhs >= bound;
    }
    for (std::size_t k = opt.scan_kmax; k >= 1; --k) {
      if (!ok[k]) break;
      k0 = static_cast<std::int64_t>(k);
    }
    if (k0 < 0) fail(Errc::InvalidSpec, "holder_check: growth condition never holds within scan horizon");
  }
  const std::uint64_t n0 = std::uint64_t{1} << static_cast<std::uint64_t>(k0);

  // delta = min diam over admissible order-n_0 cylinders = p^{-(1 + max sum a_i)};
  // the diameter depends only on sum a_i, so the minimum is the max-digit sum.
  std::int64_t delta_exp = 1;
  for (std::uint64_t n = 1; n <= n0; ++n) delta_exp += constraint_at(spec, n).hi;
  // c = max(1, delta^{-1/(1+eps)}) = p^{delta_exp/(1+eps)}; the check below
  // works with exponents: violation iff A < (B - delta_exp)/(1+eps).

  std::uint64_t violations = 0, checked = 0, skipped_identical = 0, unresolved = 0;
  double ratio_sum = 0.0;
  double ratio_min = 1e300;
  std::uint64_t ratio_count = 0;
  const std::set<std::uint64_t> marked = marked_positions(spec, depth);

  for (std::uint64_t i = 0; i < pair_count; ++i) {
    RandomStream rng(seed, i);
    const SamplePoint x = sample_point(spec, depth, rng);
    const SamplePoint y = sample_point(spec, depth, rng);
    const auto b_exp = distance_exponent(x.point, y.point);
    if (!b_exp) {
      ++skipped_identical;
      continue;
    }
    const auto fx_pairs = holder_map(x.pairs, marked);
    const auto fy_pairs = holder_map(y.pairs, marked);
    const Cylinder cx = cylinder(spec.prime, fx_pairs);
    const Cylinder cy = cylinder(spec.prime, fy_pairs);
    const PAdicInt fx = PAdicInt::from_rational(spec.prime, cx.center, static_cast<std::size_t>(cx.radius_exp()));
    const PAdicInt fy = PAdicInt::from_rational(spec.prime, cy.center, static_cast<std::size_t>(cy.radius_exp()));
    const auto a_exp = distance_exponent(fx, fy);
    const double rhs = (static_cast<double>(*b_exp) - static_cast<double>(delta_exp)) / (1.0 + eps);
    ++checked;
    if (!a_exp) {
      // images agree on the whole comparable window W: |f(x)-f(y)| <= p^{-W}
      const double window = static_cast<double>(std::min(fx.precision(), fy.precision()));
      if (window + 1e-9 < rhs) ++unresolved;
      continue;
    }
    if (static_cast<double>(*a_exp) + 1e-9 < rhs) ++violations;
    const double ratio = static_cast<double>(*a_exp) / static_cast<double>(*b_exp);
    ratio_sum += ratio;
    ratio_min = std::min(ratio_min, ratio);
    ++ratio_count;
  }

  ExperimentReport r;
  r.name = "holder";
  r.p = spec.prime.value();
  r.samples = pair_count;
  r.seed = seed;
  r.statistics["eps"] = eps;
  r.statistics["depth"] = static_cast<double>(depth);
  r.statistics["k0"] = static_cast<double>(k0);
  r.statistics["n0"] = static_cast<double>(n0);
  r.statistics["delta_exp"] = static_cast<double>(delta_exp);
  r.statistics["violations"] = static_cast<double>(violations);
  r.statistics["pairs_checked"] = static_cast<double>(checked);
  r.statistics["skipped_identical"] = static_cast<double>(skipped_identical);
  r.statistics["unresolved"] = static_cast<double>(unresolved);
  r.statistics["exponent_bound"] = bound;
  r.statistics["exponent_mean"] = ratio_count ? ratio_sum / static_cast<double>(ratio_count) : 0.0;
  r.statistics["exponent_min"] = ratio_count ? ratio_min : 0.0;
  r.criteria["zero_violations"] = violations == 0 && unresolved == 0;
  r.criteria["exponent_mean_above_bound"] =
      ratio_count > 0 && r.statistics["exponent_mean"] >= bound - 0.05;
  return r;
}

}  // namespace schneider
