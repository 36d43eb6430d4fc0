#include "klab/fpmodules.hpp"

#include <algorithm>
#include <bit>

#include "klab/error.hpp"

namespace klab {

namespace {

ModuleElement drop_component(const ModuleElement& v, std::size_t i) {
  std::vector<ModuleTerm> terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms()) {
    if (t.position == i) continue;
    terms.push_back({t.position > i ? t.position - 1 : t.position, t.monomial, t.coeff});
  }
  ModuleElement out(v.field(), v.nvars(), v.rank() - 1);
  out.mutable_terms() = std::move(terms);
  return out;
}

/// Component i of v when it is a nonzero constant.
std::optional<Coeff> unit_entry(const ModuleElement& v, std::uint32_t i) {
  std::optional<Coeff> c;
  for (const auto& t : v.terms()) {
    if (t.position != i) continue;
    if (!t.monomial.is_one()) return std::nullopt;
    c = t.coeff;
  }
  return c;
}

struct Unit {
  std::size_t row;
  std::size_t col;
  Coeff value;
};

std::optional<Unit> find_unit(const std::vector<ModuleElement>& cols) {
  for (std::size_t c = 0; c < cols.size(); ++c) {
    // Prefer the sparsest column to limit fill-in.
    for (const auto& t : cols[c].terms()) {
      if (!t.monomial.is_one()) continue;
      if (auto u = unit_entry(cols[c], t.position)) return Unit{t.position, c, *u};
    }
  }
  return std::nullopt;
}

/// Clears row `u.row` of `cols` using column `u.col`, then removes both.
void eliminate_unit(std::vector<ModuleElement>& cols, const Unit& u) {
  const ModuleElement pivot = cols[u.col];
  const auto& field = pivot.field();
  Coeff inv = field.inv(u.value);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c == u.col) continue;
    Polynomial a = cols[c].component(u.row);
    if (a.is_zero()) continue;
    cols[c] -= pivot.times(a.scaled(inv));
  }
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(u.col));
  for (auto& c : cols) c = drop_component(c, u.row);
}

std::vector<ModuleElement> nonzero(std::vector<ModuleElement> cols) {
  std::erase_if(cols, [](const ModuleElement& v) { return v.is_zero(); });
  return cols;
}

/// Transpose of a matrix given by columns of rank `rows`.
std::vector<ModuleElement> transpose(const std::vector<ModuleElement>& cols, std::size_t rows, const RingSpec& ring) {
  std::vector<std::vector<ModuleTerm>> out(rows);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& t : cols[c].terms()) out[t.position].push_back({static_cast<std::uint32_t>(c), t.monomial, t.coeff});
  }
  std::vector<ModuleElement> result;
  result.reserve(rows);
  for (auto& terms : out) result.emplace_back(ring.field(), ring.nvars(), cols.size(), std::move(terms));
  return result;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det(m[0][0].field(), m[0][0].nvars());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(std::move(minor));
    if (c % 2) {
      det -= term;
    } else {
      det += term;
    }
  }
  return det;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ull << 40)) return r;
  }
  return r;
}

}  // namespace

ModulePresentation quotient_presentation(const std::vector<Polynomial>& j, const RingSpec& ring) {
  std::vector<ModuleElement> cols;
  for (const auto& f : j) cols.push_back(ModuleElement::from_polynomial(f));
  return ModulePresentation(ring, 1, std::move(cols), "R/J");
}

ModulePresentation present_ideal_module(const std::vector<Polynomial>& gens, const RingSpec& ring) {
  if (gens.empty()) throw ArgumentError("an ideal module needs at least one generator");
  std::vector<ModuleElement> cols;
  for (const auto& g : gens) cols.push_back(ModuleElement::from_polynomial(g));
  auto rels = kernel_of_map(cols, gens.size(), 1, relation_columns(ring, 1), ring);
  return ModulePresentation(ring, gens.size(), std::move(rels), "ideal module");
}

ModulePresentation prune_presentation(const ModulePresentation& p) {
  std::vector<ModuleElement> cols = p.relations();
  std::size_t rank = p.ambient_rank();
  while (auto u = find_unit(cols)) {
    eliminate_unit(cols, *u);
    --rank;
    cols = nonzero(std::move(cols));
  }
  return ModulePresentation(p.ring(), rank, std::move(cols), p.label());
}

FreeResolution free_resolution(const ModulePresentation& p, std::size_t length) {
  if (length < 1) throw ArgumentError("resolution length must be at least 1");
  const RingSpec ring = p.ring().ambient();
  FreeResolution res{ring, {}, {}};
  ModulePresentation pruned = prune_presentation(p);
  res.ranks.push_back(pruned.ambient_rank());
  res.maps.push_back(pruned.relations());
  res.ranks.push_back(pruned.relations().size());
  while (res.maps.size() < length && res.ranks.back() > 0) {
    const auto& prev = res.maps.back();
    std::vector<ModuleElement> next = syzygies(prev, ring).columns;
    std::size_t k = res.maps.size();  // next : F_{k+1} -> F_k
    while (auto u = find_unit(next)) {
      eliminate_unit(next, *u);
      // basis vector u.row of F_k now maps to zero under d_k
      auto& left = res.maps[k - 1];
      left.erase(left.begin() + static_cast<std::ptrdiff_t>(u->row));
      --res.ranks[k];
      next = nonzero(std::move(next));
    }
    res.ranks.push_back(next.size());
    res.maps.push_back(std::move(next));
  }
  // A trailing empty map means the resolution reached zero.
  while (res.maps.size() > 1 && res.maps.back().empty() && res.ranks.back() == 0 &&
         res.ranks[res.ranks.size() - 2] == 0) {
    res.maps.pop_back();
    res.ranks.pop_back();
  }
  return res;
}

ModulePresentation ext_module(const ModulePresentation& p, std::size_t j) {
  const RingSpec ring = p.ring().ambient();
  if (j > ring.nvars()) throw ArgumentError("Ext index exceeds the number of variables");
  FreeResolution res = free_resolution(p, j + 1);
  std::string label = "Ext^" + std::to_string(j);
  if (j >= res.ranks.size() || res.ranks[j] == 0) return ModulePresentation(ring, 0, {}, label);
  const std::size_t rj = res.ranks[j];
  std::vector<ModuleElement> ker;
  if (j < res.maps.size() && res.ranks[j + 1] > 0) {
    ker = kernel_of_map(transpose(res.maps[j], rj, ring), rj, res.ranks[j + 1], {}, ring);
  } else {
    for (std::size_t i = 0; i < rj; ++i) ker.push_back(ModuleElement::basis(ring.one(), rj, i));
  }
  std::vector<ModuleElement> im;
  if (j >= 1 && res.ranks[j - 1] > 0) im = nonzero(transpose(res.maps[j - 1], res.ranks[j - 1], ring));
  return subquotient_presentation(ker, im, ModulePresentation::free(ring, rj), label);
}

ModulePresentation subquotient_presentation(const std::vector<ModuleElement>& kernel_gens,
                                            const std::vector<ModuleElement>& image_gens,
                                            const ModulePresentation& ambient, std::string label) {
  const RingSpec& ring = ambient.ring();
  const std::size_t r = ambient.ambient_rank();
  const std::size_t a = kernel_gens.size();
  if (a == 0) {
    if (!image_gens.empty()) {
      for (const auto& g : image_gens) {
        if (!g.is_zero()) throw InconsistencyError("image is nonzero but the kernel is empty");
      }
    }
    return ModulePresentation(ring, 0, {}, std::move(label));
  }
  for (const auto& k : kernel_gens) {
    if (k.rank() != r) throw StructuralError("kernel generator rank differs from the ambient rank");
  }
  std::vector<ModuleElement> rels;
  std::vector<ModuleElement> augmented = kernel_gens;
  for (const auto& u : ambient.relations()) augmented.push_back(u);
  if (!image_gens.empty()) {
    auto gb = buchberger(augmented, {.track = true});
    for (const auto& g : image_gens) {
      auto lift = lift_through(g, augmented, gb);
      if (!lift.ok()) throw InconsistencyError("image generator does not lie in the kernel");
      std::vector<Polynomial> head(lift.coefficients->begin(), lift.coefficients->begin() + static_cast<std::ptrdiff_t>(a));
      ModuleElement col{std::span<const Polynomial>(head)};
      if (!col.is_zero()) rels.push_back(std::move(col));
    }
  }
  for (auto& s : kernel_of_map(kernel_gens, a, r, ambient.relations(), ring)) rels.push_back(std::move(s));
  return prune_presentation(ModulePresentation(ring, a, std::move(rels), std::move(label)));
}

int krull_dimension(const std::vector<Polynomial>& j, const RingSpec& ring) {
  const std::size_t nv = ring.nvars();
  std::vector<Polynomial> gens;
  for (const auto& f : j) {
    if (!f.is_zero()) gens.push_back(f);
  }
  if (gens.empty()) return static_cast<int>(nv);
  auto gb = buchberger(gens);
  if (gb.is_whole_module()) return -1;
  std::vector<std::uint32_t> masks;
  for (const auto& e : gb.elements()) masks.push_back(e.leading_term().monomial.support_mask());
  int best = 0;
  for (std::uint32_t t = 0; t < (1u << nv); ++t) {
    int size = std::popcount(t);
    if (size <= best) continue;
    bool independent = std::none_of(masks.begin(), masks.end(), [t](std::uint32_t m) { return (m & ~t) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool is_homogeneous_ideal(const std::vector<Polynomial>& j) {
  std::vector<Polynomial> gens;
  for (const auto& f : j) {
    if (!f.is_zero()) gens.push_back(f);
  }
  if (gens.empty()) return true;
  auto gb = buchberger(gens);
  for (const auto& e : gb.reduced()) {
    if (!e.is_homogeneous()) return false;
  }
  return true;
}

std::optional<std::vector<Polynomial>> fitting_ideal(const ModulePresentation& p, std::size_t minor_limit) {
  const RingSpec& ring = p.ring();
  const std::size_t r = p.ambient_rank();
  const auto& rels = p.relations();
  if (r == 0) return std::vector<Polynomial>{ring.one()};
  if (rels.size() < r) return std::vector<Polynomial>{};
  if (r > 6 || binomial(rels.size(), r) > minor_limit) return std::nullopt;
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& c : rels) entries.push_back(c.components());
  std::vector<Polynomial> minors;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  for (;;) {
    std::vector<std::vector<Polynomial>> m(r);
    for (std::size_t row = 0; row < r; ++row) {
      for (std::size_t k = 0; k < r; ++k) m[row].push_back(entries[pick[k]][row]);
    }
    Polynomial det = determinant(std::move(m));
    if (!det.is_zero()) minors.push_back(std::move(det));
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == rels.size() - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < r; ++k) pick[k] = pick[k - 1] + 1;
  }
  return minors;
}

std::vector<Polynomial> annihilator(const ModulePresentation& p) {
  const RingSpec& ring = p.ring();
  const std::size_t r = p.ambient_rank();
  if (r == 0) return {ring.one()};
  const std::size_t big = r * r;
  std::vector<ModuleTerm> diag;
  for (std::size_t i = 0; i < r; ++i) diag.push_back({static_cast<std::uint32_t>(i * r + i), ring.unit_monomial(), 1});
  ModuleElement col(ring.field(), ring.nvars(), big, std::move(diag));
  std::vector<ModuleElement> targets;
  for (std::size_t b = 0; b < r; ++b) {
    for (const auto& u : p.relations()) targets.push_back(u.embedded(big, b * r));
  }
  std::vector<Polynomial> out;
  for (const auto& k : kernel_of_map({col}, 1, big, targets, ring)) out.push_back(k.component(0));
  return out;
}

SupportDimension support_dimension(const ModulePresentation& p, std::size_t minor_limit) {
  SupportDimension s;
  std::vector<Polynomial> ideal;
  if (auto fitt = fitting_ideal(p, minor_limit)) {
    ideal = std::move(*fitt);
    s.method = SupportMethod::kFitting;
  } else {
    ideal = annihilator(p);
    s.method = SupportMethod::kAnnihilator;
  }
  // Fitting ideals of presentations over S/(q) still have the radical of Ann over S.
  s.dimension = krull_dimension(ideal, p.ring().ambient());
  s.conical = is_homogeneous_ideal(ideal);
  return s;
}

}  // namespace klab
