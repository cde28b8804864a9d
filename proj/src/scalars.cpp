#include "fubinilab/scalars.hpp"

#include <string>

namespace fubinilab {

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::make(int p, int bound) {
  if (p > bound) fail(ErrorKind::BoundExceeded, "characteristic " + std::to_string(p) + " above bound " + std::to_string(bound));
  if (!is_prime(p)) fail(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  return Field(p);
}

Field::Field(int p) : p_(p), add_(p * p), mul_(p * p), neg_(p), inv_(p, 0) {
  for (int a = 0; a < p; ++a) {
    neg_[a] = (p - a) % p;
    for (int b = 0; b < p; ++b) {
      add_[idx(a, b)] = (a + b) % p;
      mul_[idx(a, b)] = (a * b) % p;
      if ((a * b) % p == 1) inv_[a] = b;
    }
  }
}

int Field::inv(int a) const {
  if (a == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
  return inv_[a];
}

}  // namespace fubinilab
