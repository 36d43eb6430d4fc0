#pragma once

#include <cstdint>
#include <string>

namespace klab {

using Coeff = std::uint32_t;

/// Prime field Z/pZ. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  static constexpr Coeff kDefaultModulus = 32003;

  /// Throws ArgumentError unless `modulus` is an odd prime below 2^31.
  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  Coeff modulus() const noexcept { return p_; }

  Coeff reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Throws DivisionByZero for a == 0.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t centered(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  Coeff p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Inverse of `a` modulo the field's prime.
inline Coeff ff_inv(Coeff a, const PrimeField& field) { return field.inv(a); }

}  // namespace klab
