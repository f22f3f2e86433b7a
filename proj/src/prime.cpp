#include "schneider/prime.hpp"

namespace schneider {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
  if (p >= (std::int64_t{1} << 31)) {
    fail(Errc::InvalidSpec, "Prime: moduli >= 2^31 are not supported");
  }
  if (!is_prime(p)) {
    fail(Errc::InvalidSpec, "Prime: " + std::to_string(p) + " is not prime");
  }
}

}  // namespace schneider
