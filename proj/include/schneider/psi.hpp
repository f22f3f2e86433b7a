#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schneider/errors.hpp"

namespace schneider {

/// Asymptotic class of psi(n)/n; the dimension theorems depend on nothing
/// else. The class is declared, never inferred: a limit is not computable
/// from finitely many values.
struct PsiClass {
  enum class Tag { SublinearZero, LinearLimit, SuperlinearInfinity };
  Tag tag;
  double alpha = 0.0;  // the limit, when tag == LinearLimit

  static PsiClass sublinear() { return {Tag::SublinearZero, 0.0}; }
  static PsiClass linear(double a) { return {Tag::LinearLimit, a}; }
  static PsiClass superlinear() { return {Tag::SuperlinearInfinity, 0.0}; }
};

/// Growth function psi: N -> R+, psi(n) -> infinity. Built-in families carry
/// their class; file-backed tables must declare one.
struct PsiSpec {
  enum class Kind { LogGrowth, PowerGrowth, LinearGrowth, NLogN, CustomTable };

  Kind kind;
  double gamma = 0.0;                 // PowerGrowth exponent (> 0, != 1)
  double alpha = 0.0;                 // LinearGrowth slope (> 0)
  std::vector<double> values;         // CustomTable, values[i] = psi(i+1)
  std::optional<PsiClass> declared;   // mandatory for CustomTable

  static PsiSpec log_growth();
  static PsiSpec power(double gamma);  // n^gamma; gamma in (0,1) or > 1
  static PsiSpec linear(double alpha);
  static PsiSpec nlogn();
  static PsiSpec table(std::vector<double> values, PsiClass declared);

  double eval(std::uint64_t n) const;

  /// floor(psi(n)) + 1, the forced digit of the Cantor constructions.
  /// Exact integer arithmetic where the family permits (sqrt, squares,
  /// integral slopes).
  std::int64_t forced_digit(std::uint64_t n) const;

  /// Throws UnclassifiedPsi for a table without a declared class.
  PsiClass cls() const;
};

std::string to_string(PsiClass::Tag t);

}  // namespace schneider
