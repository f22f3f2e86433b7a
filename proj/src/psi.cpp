#include "schneider/psi.hpp"

#include <cmath>

namespace schneider {

PsiSpec PsiSpec::log_growth() { return {Kind::LogGrowth, 0, 0, {}, PsiClass::sublinear()}; }

PsiSpec PsiSpec::power(double gamma) {
  if (gamma <= 0 || gamma == 1.0) fail(Errc::InvalidSpec, "PsiSpec::power: gamma must be > 0 and != 1");
  return {Kind::PowerGrowth, gamma, 0, {}, gamma < 1 ? PsiClass::sublinear() : PsiClass::superlinear()};
}

PsiSpec PsiSpec::linear(double alpha) {
  if (alpha <= 0) fail(Errc::InvalidSpec, "PsiSpec::linear: alpha must be > 0");
  return {Kind::LinearGrowth, 0, alpha, {}, PsiClass::linear(alpha)};
}

PsiSpec PsiSpec::nlogn() { return {Kind::NLogN, 0, 0, {}, PsiClass::superlinear()}; }

PsiSpec PsiSpec::table(std::vector<double> values, PsiClass declared) {
  if (values.empty()) fail(Errc::InvalidSpec, "PsiSpec::table: empty table");
  return {Kind::CustomTable, 0, 0, std::move(values), declared};
}

double PsiSpec::eval(std::uint64_t n) const {
  switch (kind) {
    case Kind::LogGrowth: return std::log(static_cast<double>(n));
    case Kind::PowerGrowth: return std::pow(static_cast<double>(n), gamma);
    case Kind::LinearGrowth: return alpha * static_cast<double>(n);
    case Kind::NLogN: return static_cast<double>(n) * std::log(static_cast<double>(n));
    case Kind::CustomTable:
      if (n == 0 || n > values.size()) fail(Errc::InvalidSpec, "PsiSpec: index outside table");
      return values[n - 1];
  }
  fail(Errc::InvalidSpec, "PsiSpec: bad kind");
}

static std::int64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::int64_t>(r);
}

std::int64_t PsiSpec::forced_digit(std::uint64_t n) const {
  switch (kind) {
    case Kind::PowerGrowth:
      if (gamma == 0.5) return isqrt_u64(n) + 1;
      if (gamma == 2.0) return static_cast<std::int64_t>(n * n) + 1;
      break;
    case Kind::LinearGrowth:
      if (alpha == std::floor(alpha)) {
        return static_cast<std::int64_t>(alpha) * static_cast<std::int64_t>(n) + 1;
      }
      break;
    default: break;
  }
  return static_cast<std::int64_t>(std::floor(eval(n))) + 1;
}

PsiClass PsiSpec::cls() const {
  if (!declared) fail(Errc::UnclassifiedPsi, "PsiSpec: table carries no declared class");
  return *declared;
}

std::string to_string(PsiClass::Tag t) {
  switch (t) {
    case PsiClass::Tag::SublinearZero: return "sublinear_zero";
    case PsiClass::Tag::LinearLimit: return "linear_limit";
    case PsiClass::Tag::SuperlinearInfinity: return "superlinear_infinity";
  }
  return "?";
}

}  // namespace schneider
