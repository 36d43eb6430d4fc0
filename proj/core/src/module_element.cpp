#include "klab/module_element.hpp"

#include <algorithm>

#include "klab/error.hpp"

namespace klab {

namespace {

bool term_greater(const ModuleTerm& a, const ModuleTerm& b) {
  return pot_cmp(a.position, a.monomial, b.position, b.monomial) > 0;
}

}  // namespace

std::vector<ModuleTerm> merge_module_terms(const PrimeField& field, const std::vector<ModuleTerm>& a,
                                           const std::vector<ModuleTerm>& b, Coeff scale) {
  std::vector<ModuleTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = pot_cmp(a[i].position, a[i].monomial, b[j].position, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Coeff v = field.mul(b[j].coeff, scale);
      if (v) out.push_back({b[j].position, b[j].monomial, v});
      ++j;
    } else {
      Coeff s = field.add(a[i].coeff, field.mul(b[j].coeff, scale));
      if (s) out.push_back({a[i].position, a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Coeff v = field.mul(b[j].coeff, scale);
    if (v) out.push_back({b[j].position, b[j].monomial, v});
  }
  return out;
}

ModuleElement::ModuleElement(PrimeField field, std::size_t nvars, std::size_t rank, std::vector<ModuleTerm> terms)
    : field_(field), nvars_(nvars), rank_(rank) {
  for (const auto& t : terms) {
    if (t.position >= rank) throw StructuralError("module term position exceeds the ambient rank");
    if (t.monomial.nvars() != nvars) throw StructuralError("module term variable count mismatch");
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().position == t.position && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = field_.add(terms_.back().coeff, t.coeff);
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const ModuleTerm& t) { return t.coeff == 0; });
}

ModuleElement::ModuleElement(std::span<const Polynomial> components)
    : field_(components.empty() ? PrimeField() : components.front().field()),
      nvars_(components.empty() ? 0 : components.front().nvars()),
      rank_(components.size()) {
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& p = components[i];
    if (!(p.field() == field_) || p.nvars() != nvars_) throw StructuralError("components live in different rings");
    for (const auto& t : p.terms()) terms_.push_back({static_cast<std::uint32_t>(i), t.monomial, t.coeff});
  }
}

ModuleElement ModuleElement::basis(const Polynomial& p, std::size_t rank, std::size_t index) {
  if (index >= rank) throw StructuralError("basis index out of range");
  ModuleElement e(p.field(), p.nvars(), rank);
  for (const auto& t : p.terms()) e.terms_.push_back({static_cast<std::uint32_t>(index), t.monomial, t.coeff});
  return e;
}

Polynomial ModuleElement::component(std::size_t i) const {
  if (i >= rank_) throw StructuralError("component index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.position == i) terms.push_back({t.monomial, t.coeff});
  }
  Polynomial p(field_, nvars_);
  if (!terms.empty()) p = Polynomial(field_, nvars_, std::move(terms));
  return p;
}

std::vector<Polynomial> ModuleElement::components() const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : terms_) parts[t.position].push_back({t.monomial, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& part : parts) out.emplace_back(field_, nvars_, std::move(part));
  return out;
}

void ModuleElement::check_compatible(const ModuleElement& other) const {
  if (rank_ != other.rank_ || nvars_ != other.nvars_ || !(field_ == other.field_)) {
    throw StructuralError("module elements live in different free modules");
  }
}

ModuleElement ModuleElement::operator-() const { return scaled(field_.neg(1)); }

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  check_compatible(other);
  terms_ = merge_module_terms(field_, terms_, other.terms_, 1);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  check_compatible(other);
  terms_ = merge_module_terms(field_, terms_, other.terms_, field_.neg(1));
  return *this;
}

void ModuleElement::add_scaled(const ModuleElement& other, Coeff scale) {
  check_compatible(other);
  if (scale == 0 || other.is_zero()) return;
  terms_ = merge_module_terms(field_, terms_, other.terms_, scale);
}

ModuleElement ModuleElement::scaled(Coeff c) const {
  ModuleElement r(field_, nvars_, rank_);
  c %= field_.modulus();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

ModuleElement ModuleElement::times_monomial(const Monomial& m, Coeff c) const {
  ModuleElement r(field_, nvars_, rank_);
  c %= field_.modulus();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.position, t.monomial * m, field_.mul(t.coeff, c)});
  return r;
}

ModuleElement ModuleElement::times(const Polynomial& p) const {
  ModuleElement acc(field_, nvars_, rank_);
  for (const auto& t : p.terms()) acc.add_scaled(times_monomial(t.monomial), t.coeff);
  return acc;
}

std::optional<unsigned> ModuleElement::valuation() const {
  if (terms_.empty()) return std::nullopt;
  unsigned v = terms_.front().monomial.degree();
  for (const auto& t : terms_) v = std::min<unsigned>(v, t.monomial.degree());
  return v;
}

ModuleElement ModuleElement::truncated(unsigned bound) const {
  ModuleElement r(field_, nvars_, rank_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() < bound) r.terms_.push_back(t);
  }
  return r;
}

bool ModuleElement::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

std::optional<std::size_t> ModuleElement::unit_position() const {
  for (const auto& t : terms_) {
    if (t.monomial.is_one()) return t.position;
  }
  return std::nullopt;
}

ModuleElement ModuleElement::embedded(std::size_t new_rank, std::size_t offset) const {
  if (offset + rank_ > new_rank) throw StructuralError("embedding does not fit");
  ModuleElement r(field_, nvars_, new_rank);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.position += static_cast<std::uint32_t>(offset);
  return r;
}

ModuleElement ModuleElement::projected(std::size_t begin, std::size_t count) const {
  ModuleElement r(field_, nvars_, count);
  for (const auto& t : terms_) {
    if (t.position >= begin && t.position < begin + count) {
      r.terms_.push_back({static_cast<std::uint32_t>(t.position - begin), t.monomial, t.coeff});
    }
  }
  return r;
}

std::string ModuleElement::to_string(std::span<const std::string> names) const {
  std::string out = "(";
  auto comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ", ";
    out += comps[i].to_string(names);
  }
  return out + ")";
}

}  // namespace klab
