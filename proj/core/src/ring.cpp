#include "klab/ring.hpp"

#include <algorithm>
#include <set>

#include "klab/error.hpp"

namespace klab {

RingSpec::RingSpec(PrimeField field, std::vector<std::string> variables, std::vector<Polynomial> quotient_relations,
                   std::optional<std::string> dvr_proxy_variable)
    : field_(field),
      variables_(std::move(variables)),
      relations_(std::move(quotient_relations)),
      proxy_(std::move(dvr_proxy_variable)) {
  if (variables_.empty()) throw ArgumentError("a ring needs at least one variable");
  if (variables_.size() > kMaxVars) throw StructuralError("too many variables");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw ArgumentError("empty variable name");
    if (!seen.insert(v).second) throw ArgumentError("duplicate variable name '" + v + "'");
  }
  for (const auto& r : relations_) {
    if (r.nvars() != variables_.size() || !(r.field() == field_)) {
      throw StructuralError("quotient relation does not live in the ambient ring");
    }
  }
  std::erase_if(relations_, [](const Polynomial& p) { return p.is_zero(); });
  if (proxy_ && !seen.count(*proxy_)) {
    throw ArgumentError("DVR proxy '" + *proxy_ + "' is not a declared variable");
  }
}

std::optional<std::size_t> RingSpec::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

Polynomial RingSpec::var(const std::string& name, unsigned power) const {
  auto idx = index_of(name);
  if (!idx) throw ArgumentError("unknown variable '" + name + "'");
  return var(*idx, power);
}

Polynomial RingSpec::var(std::size_t index, unsigned power) const {
  return Polynomial::variable(field_, nvars(), index, power);
}

RingSpec RingSpec::with_field(PrimeField field) const {
  std::vector<Polynomial> rels;
  for (const auto& r : relations_) {
    std::vector<Term> terms;
    for (const auto& t : r.terms()) {
      terms.push_back({t.monomial, field.reduce(field_.centered(t.coeff))});
    }
    rels.emplace_back(field, nvars(), std::move(terms));
  }
  return RingSpec(field, variables_, std::move(rels), proxy_);
}

RingSpec RingSpec::with_relations(std::vector<Polynomial> relations) const {
  return RingSpec(field_, variables_, std::move(relations), proxy_);
}

std::string RingSpec::to_string() const {
  std::string out = "GF(" + std::to_string(field_.modulus()) + ")[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ",";
    out += variables_[i];
  }
  out += "]";
  if (!relations_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) out += ", ";
      out += relations_[i].to_string(variables_);
    }
    out += ")";
  }
  if (proxy_) out += " [DVR proxy " + *proxy_ + "]";
  return out;
}

}  // namespace klab
