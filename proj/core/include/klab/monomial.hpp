#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace klab {

/// Upper bound on the number of ring variables a Monomial can carry.
inline constexpr std::size_t kMaxVars = 12;

using Exponent = std::uint16_t;

/// Exponent vector with its cached total degree.
///
/// The tuple length equals the variable count of the ring the monomial lives
/// in; exponents past that length are always zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::initializer_list<unsigned> exps);
  Monomial(std::size_t nvars, std::span<const unsigned> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  bool is_one() const noexcept { return degree_ == 0; }

  /// Bit pattern with bit v set when exponent v is nonzero (cheap divisibility filter).
  std::uint32_t support_mask() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, other) in the sense other | *this.
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

  /// Renders with the given variable names, e.g. "x^2*y"; "1" for the unit.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint16_t nvars_ = 0;
};

enum class MonomialOrder { kGrevlex, kDeglex, kLex };

/// Total order on monomials of equal variable count. The engine itself always
/// runs graded reverse lexicographic with the declared variable order
/// (variable 0 largest). Throws StructuralError on mismatched variable counts.
std::strong_ordering mon_cmp(const Monomial& a, const Monomial& b,
                             MonomialOrder order = MonomialOrder::kGrevlex);

/// Grevlex comparison without the structural check (hot path).
inline std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

/// All monomials of total degree exactly `degree` in `nvars` variables,
/// sorted descending in grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace klab
