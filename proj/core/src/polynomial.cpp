#include "klab/polynomial.hpp"

#include <algorithm>

#include "klab/error.hpp"

namespace klab {

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_cmp(a.monomial, b.monomial) > 0; }

std::vector<Term> canonicalize(const PrimeField& field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(t);
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  // a zero may hide in the middle when three equal monomials cancel in pairs
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  return out;
}

}  // namespace

std::vector<Term> merge_terms(const PrimeField& field, const std::vector<Term>& a, const std::vector<Term>& b,
                              Coeff b_scale) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = grevlex_cmp(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, field.mul(b[j].coeff, b_scale)});
      ++j;
    } else {
      Coeff s = field.add(a[i].coeff, field.mul(b[j].coeff, b_scale));
      if (s) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, field.mul(b[j].coeff, b_scale)});
  if (b_scale == 0) std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  return out;
}

Polynomial::Polynomial(PrimeField field, std::size_t nvars, std::vector<Term> terms)
    : field_(field), nvars_(nvars) {
  for (const auto& t : terms) {
    if (t.monomial.nvars() != nvars) throw StructuralError("term variable count differs from polynomial");
    if (t.coeff >= field.modulus()) throw ArgumentError("coefficient not reduced modulo the field prime");
  }
  terms_ = canonicalize(field_, std::move(terms));
}

Polynomial Polynomial::constant(PrimeField field, std::size_t nvars, std::int64_t c) {
  Polynomial p(field, nvars);
  Coeff r = field.reduce(c);
  if (r) p.terms_.push_back({Monomial(nvars), r});
  return p;
}

Polynomial Polynomial::monomial(PrimeField field, const Monomial& m, Coeff c) {
  Polynomial p(field, m.nvars());
  c %= field.modulus();
  if (c) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(PrimeField field, std::size_t nvars, std::size_t index, unsigned power) {
  return monomial(field, Monomial::variable(nvars, index, power));
}

unsigned Polynomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial.degree());
  return d;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!(field_ == other.field_) || nvars_ != other.nvars_) {
    throw StructuralError("polynomials live in different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  terms_ = merge_terms(field_, terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  terms_ = merge_terms(field_, terms_, other.terms_, field_.neg(1));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  // sum one shifted copy of the larger factor per term of the smaller one
  Polynomial acc(a.field_, a.nvars_);
  for (const auto& t : small.terms_) {
    std::vector<Term> shifted;
    shifted.reserve(large.size());
    for (const auto& u : large.terms_) {
      shifted.push_back({t.monomial * u.monomial, a.field_.mul(t.coeff, u.coeff)});
    }
    acc.terms_ = merge_terms(a.field_, acc.terms_, shifted, 1);
  }
  return acc;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= field_.modulus();
  Polynomial r(field_, nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coeff c) const {
  Polynomial r(field_, nvars_);
  c %= field_.modulus();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field_.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(field_, nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field_.centered(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

std::optional<unsigned> poly_valuation(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  unsigned v = f.terms().front().monomial.degree();
  for (const auto& t : f.terms()) v = std::min<unsigned>(v, t.monomial.degree());
  return v;
}

Polynomial poly_truncate(const Polynomial& f, unsigned bound) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() < bound) kept.push_back(t);
  }
  return Polynomial(f.field(), f.nvars(), std::move(kept));
}

}  // namespace klab
