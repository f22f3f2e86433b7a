#pragma once

#include <cstdint>

#include "schneider/errors.hpp"

namespace schneider {

bool is_prime(std::int64_t n);

/// Prime modulus for the p-adic arithmetic. Primality is checked once here;
/// everything downstream assumes it.
class Prime {
public:
  explicit Prime(std::int64_t p);
  std::int64_t value() const noexcept { return p_; }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

private:
  std::int64_t p_;
};

}  // namespace schneider
