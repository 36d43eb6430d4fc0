#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "klab/field.hpp"
#include "klab/polynomial.hpp"

namespace klab {

/// Ambient ring description: a polynomial ring over a prime field in named
/// variables, optionally modulo quotient relations.
///
/// Local quantities are always taken at the origin (all variables zero). A
/// discrete valuation ring V is modelled by an ordinary variable designated as
/// the proxy for its uniformizer.
class RingSpec {
 public:
  RingSpec(PrimeField field, std::vector<std::string> variables,
           std::vector<Polynomial> quotient_relations = {},
           std::optional<std::string> dvr_proxy_variable = std::nullopt);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Polynomial>& quotient_relations() const noexcept { return relations_; }
  const std::optional<std::string>& dvr_proxy_variable() const noexcept { return proxy_; }
  bool has_relations() const noexcept { return !relations_.empty(); }

  /// Index of a declared variable; nullopt when undeclared.
  std::optional<std::size_t> index_of(const std::string& name) const;

  Polynomial zero() const { return Polynomial(field_, nvars()); }
  Polynomial one() const { return Polynomial::constant(field_, nvars(), 1); }
  Polynomial constant(std::int64_t c) const { return Polynomial::constant(field_, nvars(), c); }
  /// Throws ArgumentError for undeclared names.
  Polynomial var(const std::string& name, unsigned power = 1) const;
  Polynomial var(std::size_t index, unsigned power = 1) const;
  Monomial unit_monomial() const { return Monomial(nvars()); }

  /// Same variables and relations over a different prime.
  RingSpec with_field(PrimeField field) const;
  /// Same field and variables, relations replaced.
  RingSpec with_relations(std::vector<Polynomial> relations) const;
  /// Relations dropped: the ambient polynomial ring S.
  RingSpec ambient() const { return with_relations({}); }

  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.field_ == b.field_ && a.variables_ == b.variables_ && a.relations_ == b.relations_ &&
           a.proxy_ == b.proxy_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  std::vector<Polynomial> relations_;
  std::optional<std::string> proxy_;
};

}  // namespace klab
