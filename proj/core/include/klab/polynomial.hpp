#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "klab/field.hpp"
#include "klab/monomial.hpp"

namespace klab {

struct Term {
  Monomial monomial;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over a prime field.
///
/// Terms are kept strictly sorted descending in grevlex with no zero
/// coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial(PrimeField field, std::size_t nvars) : field_(field), nvars_(nvars) {}
  /// Canonicalizes: sorts, merges duplicates, drops zeros.
  Polynomial(PrimeField field, std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(PrimeField field, std::size_t nvars, std::int64_t c);
  static Polynomial monomial(PrimeField field, const Monomial& m, Coeff c = 1);
  static Polynomial variable(PrimeField field, std::size_t nvars, std::size_t index, unsigned power = 1);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Nonzero constant (a unit of the polynomial ring).
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
  const Term& leading_term() const { return terms_.front(); }

  /// Largest total degree among terms; 0 for the zero polynomial.
  unsigned degree() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(const Monomial& m, Coeff c = 1) const;
  Polynomial pow(unsigned e) const;

  bool is_homogeneous() const noexcept;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Integer-coefficient rendering with centered representatives, e.g. "x^2 - 3*y + 1".
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const Polynomial& other) const;

  PrimeField field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Exact product; no quotient relations are applied.
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Minimal total degree among terms; nullopt stands for +infinity (zero polynomial).
std::optional<unsigned> poly_valuation(const Polynomial& f);

/// Drops every term of total degree >= bound.
Polynomial poly_truncate(const Polynomial& f, unsigned bound);

/// Merge two descending term lists into a sum (helper shared with module code).
std::vector<Term> merge_terms(const PrimeField& field, const std::vector<Term>& a, const std::vector<Term>& b,
                              Coeff b_scale);

}  // namespace klab
