#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "klab/polynomial.hpp"

namespace klab {

struct ModuleTerm {
  std::uint32_t position;
  Monomial monomial;
  Coeff coeff;

  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

/// Position-over-term order: lower position index is larger, ties broken by grevlex.
inline std::strong_ordering pot_cmp(std::uint32_t pa, const Monomial& ma, std::uint32_t pb,
                                    const Monomial& mb) noexcept {
  if (pa != pb) return pb <=> pa;
  return grevlex_cmp(ma, mb);
}

/// Element of the free module S^rank, stored as one sparse term list sorted
/// descending in the position-over-term order.
class ModuleElement {
 public:
  ModuleElement(PrimeField field, std::size_t nvars, std::size_t rank)
      : field_(field), nvars_(nvars), rank_(rank) {}
  ModuleElement(PrimeField field, std::size_t nvars, std::size_t rank, std::vector<ModuleTerm> terms);
  /// Column vector with the given components; rank = components.size().
  explicit ModuleElement(std::span<const Polynomial> components);
  ModuleElement(std::initializer_list<Polynomial> components)
      : ModuleElement(std::span<const Polynomial>(components.begin(), components.size())) {}

  /// Standard basis vector e_index scaled by `p`.
  static ModuleElement basis(const Polynomial& p, std::size_t rank, std::size_t index);
  static ModuleElement from_polynomial(const Polynomial& p) { return basis(p, 1, 0); }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<ModuleTerm>& terms() const noexcept { return terms_; }
  std::vector<ModuleTerm>& mutable_terms() noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const ModuleTerm& leading_term() const { return terms_.front(); }

  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  /// this + scale * other
  void add_scaled(const ModuleElement& other, Coeff scale);
  ModuleElement scaled(Coeff c) const;
  ModuleElement times_monomial(const Monomial& m, Coeff c = 1) const;
  ModuleElement times(const Polynomial& p) const;

  /// Minimal total degree among terms; nullopt for zero.
  std::optional<unsigned> valuation() const;
  ModuleElement truncated(unsigned bound) const;
  bool is_homogeneous() const noexcept;
  /// Some component is a nonzero constant; returns its position.
  std::optional<std::size_t> unit_position() const;

  /// Same entries placed into a free module of larger rank at an offset.
  ModuleElement embedded(std::size_t new_rank, std::size_t offset) const;
  /// Keeps components [begin, begin + count) and renumbers them from zero.
  ModuleElement projected(std::size_t begin, std::size_t count) const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) noexcept {
    return a.rank_ == b.rank_ && a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const ModuleElement& other) const;

  PrimeField field_;
  std::size_t nvars_;
  std::size_t rank_;
  std::vector<ModuleTerm> terms_;
};

using FreeModuleElement = ModuleElement;

/// Merge two POT-sorted term lists: a + scale * b.
std::vector<ModuleTerm> merge_module_terms(const PrimeField& field, const std::vector<ModuleTerm>& a,
                                           const std::vector<ModuleTerm>& b, Coeff scale);

}  // namespace klab
