#include "klab/field.hpp"

#include "klab/error.hpp"

namespace klab {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(0) {
  if (modulus <= 2 || modulus >= (1ULL << 31) || !is_prime(modulus)) {
    throw ArgumentError("field modulus must be an odd prime below 2^31, got " + std::to_string(modulus));
  }
  p_ = static_cast<Coeff>(modulus);
}

Coeff PrimeField::inv(Coeff a) const {
  a %= p_;
  if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace klab
