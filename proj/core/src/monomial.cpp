#include "klab/monomial.hpp"

#include <algorithm>
#include <limits>

#include "klab/error.hpp"

namespace klab {

namespace {

void check_nvars(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw StructuralError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

Exponent checked_exponent(unsigned long e) {
  if (e > std::numeric_limits<Exponent>::max()) throw ArgumentError("exponent overflow");
  return static_cast<Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::size_t nvars, std::initializer_list<unsigned> exps)
    : Monomial(nvars, std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exps) : Monomial(nvars) {
  if (exps.size() != nvars) throw StructuralError("exponent tuple length differs from variable count");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  if (index >= nvars) throw StructuralError("variable index out of range");
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw StructuralError("variable index out of range");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = checked_exponent(e);
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i]) mask |= 1u << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw StructuralError("monomial variable counts differ");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = checked_exponent(static_cast<unsigned long>(exp_[i]) + other.exp_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (divisor.exp_[i] > exp_[i]) throw ArgumentError("monomial quotient is not a monomial");
    r.exp_[i] = static_cast<Exponent>(exp_[i] - divisor.exp_[i]);
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    deg += r.exp_[i];
  }
  r.degree_ = deg;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (a.exp_[i] && b.exp_[i]) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!exp_[i]) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out;
}

std::strong_ordering mon_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.nvars() != b.nvars()) throw StructuralError("mon_cmp: variable counts differ");
  switch (order) {
    case MonomialOrder::kGrevlex:
      return grevlex_cmp(a, b);
    case MonomialOrder::kDeglex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      [[fallthrough]];
    case MonomialOrder::kLex:
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  // enumerate compositions of `degree` into nvars parts
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(nvars, std::span<const unsigned>(e));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

}  // namespace klab
