#include "klab/groebner.hpp"

#include "klab/audit.hpp"

#include <algorithm>
#include <limits>

#include "klab/audit.hpp"
#include "klab/error.hpp"

namespace klab {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// a[from..] + scale * (u * b[1..]); the leading terms are assumed to cancel.
std::vector<ModuleTerm> merge_shifted(const PrimeField& field, const std::vector<ModuleTerm>& a, std::size_t from,
                                      const std::vector<ModuleTerm>& b, std::size_t b_from, const Monomial& u,
                                      Coeff scale) {
  std::vector<ModuleTerm> out;
  out.reserve(a.size() - from + b.size() - b_from);
  std::size_t i = from, j = b_from;
  ModuleTerm next{};
  bool have_next = false;
  auto load = [&] {
    if (j < b.size()) {
      next = {b[j].position, b[j].monomial * u, field.mul(b[j].coeff, scale)};
      have_next = true;
    } else {
      have_next = false;
    }
  };
  load();
  while (i < a.size() && have_next) {
    auto c = pot_cmp(a[i].position, a[i].monomial, next.position, next.monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(next);
      ++j;
      load();
    } else {
      Coeff s = field.add(a[i].coeff, next.coeff);
      if (s) out.push_back({a[i].position, a[i].monomial, s});
      ++i;
      ++j;
      load();
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (have_next) {
    out.push_back(next);
    ++j;
    load();
  }
  return out;
}

/// Divisor lookup over a set of monic elements grouped by leading position.
class DivisorIndex {
 public:
  explicit DivisorIndex(std::size_t rank) : by_position_(rank) {}

  void add(std::size_t id, const ModuleTerm& lead) {
    by_position_.at(lead.position).push_back({id, lead.monomial, lead.monomial.support_mask()});
  }
  void remove(std::size_t id, std::uint32_t position) {
    std::erase_if(by_position_[position], [id](const Entry& e) { return e.id == id; });
  }
  std::size_t find(std::uint32_t position, const Monomial& m) const {
    if (position >= by_position_.size()) return kNone;
    std::uint32_t mask = m.support_mask();
    for (const auto& e : by_position_[position]) {
      if ((e.mask & ~mask) == 0 && e.lead.divides(m)) return e.id;
    }
    return kNone;
  }
  template <class F>
  void for_each(std::uint32_t position, F&& f) const {
    for (const auto& e : by_position_[position]) f(e.id);
  }

 private:
  struct Entry {
    std::size_t id;
    Monomial lead;
    std::uint32_t mask;
  };
  std::vector<std::vector<Entry>> by_position_;
};

struct Reduction {
  std::vector<ModuleTerm> remainder;
  std::vector<ModuleTerm> transform;
  std::vector<std::vector<Term>> quotients;
};

/// Full reduction of `f` by the monic elements in `index`. Optionally tracks a
/// transform (f_T - sum q_k T_k) and the quotient terms.
template <class Index>
void reduce_fully(const PrimeField& field, std::vector<ModuleTerm> f, const std::vector<ModuleElement>& elems,
                  const Index& index, std::vector<ModuleTerm>* transform,
                  const std::vector<ModuleElement>* transforms, std::vector<std::vector<Term>>* quotients,
                  std::vector<ModuleTerm>& remainder) {
  std::size_t head = 0;
  while (head < f.size()) {
    const ModuleTerm lt = f[head];
    std::size_t k = index.find(lt.position, lt.monomial);
    if (k == kNone) {
      remainder.push_back(lt);
      ++head;
      continue;
    }
    const auto& g = elems[k].terms();
    Monomial u = lt.monomial / g.front().monomial;
    Coeff scale = field.neg(lt.coeff);
    f = merge_shifted(field, f, head + 1, g, 1, u, scale);
    head = 0;
    if (transform) {
      *transform = merge_shifted(field, *transform, 0, (*transforms)[k].terms(), 0, u, scale);
    }
    if (quotients) (*quotients)[k].push_back({u, lt.coeff});
  }
}

ModuleElement make_element(const PrimeField& field, std::size_t nvars, std::size_t rank,
                           std::vector<ModuleTerm> terms) {
  ModuleElement e(field, nvars, rank);
  e.mutable_terms() = std::move(terms);
  return e;
}

void require_compatible(const std::vector<ModuleElement>& gens) {
  for (const auto& g : gens) {
    if (g.rank() != gens.front().rank() || g.nvars() != gens.front().nvars() ||
        !(g.field() == gens.front().field())) {
      throw StructuralError("generators live in different free modules");
    }
  }
}

}  // namespace

struct GroebnerBuilder {
  struct Item {
    std::size_t i;
    std::size_t j;  // kNone marks an input generator i
    Monomial lcm;
    std::uint32_t degree;
    std::uint64_t seq;
  };

  GroebnerBuilder(const std::vector<ModuleElement>& gens, const GroebnerOptions& options)
      : field(gens.front().field()),
        nvars(gens.front().nvars()),
        rank(gens.front().rank()),
        track(options.track),
        m(gens.size()),
        index(rank),
        gens(gens) {}

  PrimeField field;
  std::size_t nvars;
  std::size_t rank;
  bool track;
  std::size_t m;
  DivisorIndex index;
  const std::vector<ModuleElement>& gens;

  std::vector<ModuleElement> elems;
  std::vector<ModuleElement> trans;
  std::vector<bool> active;
  std::vector<Item> queue;
  std::uint64_t seq = 0;
  GroebnerStats stats;

  const ModuleTerm& lead(std::size_t k) const { return elems[k].leading_term(); }

  std::size_t pick() const {
    std::size_t best = 0;
    for (std::size_t q = 1; q < queue.size(); ++q) {
      const auto& a = queue[q];
      const auto& b = queue[best];
      if (a.degree < b.degree || (a.degree == b.degree && a.seq < b.seq)) best = q;
    }
    return best;
  }

  void update(std::size_t h) {
    const ModuleTerm& lh = lead(h);
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive;
    };
    std::vector<Cand> c;
    index.for_each(lh.position, [&](std::size_t g) {
      const Monomial& lg = lead(g).monomial;
      c.push_back({g, lcm(lh.monomial, lg), rank == 1 && coprime(lh.monomial, lg), true});
    });

    // Chain criterion on new pairs: drop (h,g1) if another survivor's lcm divides it.
    std::vector<std::size_t> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (c[b].alive && c[b].lcm.divides(c[a].lcm)) keep = false;
        }
        for (std::size_t b : d) {
          if (!keep) break;
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        }
      }
      c[a].alive = keep;
      if (keep) d.push_back(a);
    }
    std::vector<Item> fresh;
    for (std::size_t a : d) {
      if (c[a].coprime) {
        ++stats.pairs_skipped;
        continue;
      }
      fresh.push_back({c[a].g, h, c[a].lcm, c[a].lcm.degree(), seq++});
    }
    stats.pairs_skipped += c.size() - d.size();

    // Old pairs whose lcm is divisible by lt(h) with both new lcms different.
    std::erase_if(queue, [&](const Item& it) {
      if (it.j == kNone) return false;
      if (lead(it.i).position != lh.position) return false;
      if (!lh.monomial.divides(it.lcm)) return false;
      Monomial l1 = lcm(lead(it.i).monomial, lh.monomial);
      Monomial l2 = lcm(lead(it.j).monomial, lh.monomial);
      if (l1 == it.lcm || l2 == it.lcm) return false;
      ++stats.pairs_skipped;
      return true;
    });
    for (auto& it : fresh) queue.push_back(std::move(it));

    std::vector<std::size_t> dead;
    index.for_each(lh.position, [&](std::size_t g) {
      if (lh.monomial.divides(lead(g).monomial)) dead.push_back(g);
    });
    for (std::size_t g : dead) {
      index.remove(g, lh.position);
      active[g] = false;
    }
    index.add(h, lh);
    active[h] = true;
  }

  void insert(std::vector<ModuleTerm> f, std::vector<ModuleTerm> t) {
    std::vector<ModuleTerm> rem;
    std::vector<ModuleTerm>* tp = track ? &t : nullptr;
    reduce_fully(field, std::move(f), elems, index, tp, track ? &trans : nullptr, nullptr, rem);
    if (rem.empty()) {
      ++stats.zero_reductions;
      return;
    }
    Coeff inv = field.inv(rem.front().coeff);
    for (auto& term : rem) term.coeff = field.mul(term.coeff, inv);
    if (track) {
      for (auto& term : t) term.coeff = field.mul(term.coeff, inv);
    }
    elems.push_back(make_element(field, nvars, rank, std::move(rem)));
    trans.push_back(track ? make_element(field, nvars, m, std::move(t)) : ModuleElement(field, nvars, m));
    active.push_back(false);
    update(elems.size() - 1);
  }

  void run() {
    for (std::size_t j = 0; j < m; ++j) {
      if (gens[j].is_zero()) continue;
      const auto& lt = gens[j].leading_term();
      queue.push_back({j, kNone, lt.monomial, lt.monomial.degree(), seq++});
    }
    while (!queue.empty()) {
      std::size_t q = pick();
      Item it = queue[q];
      queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(q));
      std::vector<ModuleTerm> t;
      if (it.j == kNone) {
        Coeff one = 1;
        if (track) t.push_back({static_cast<std::uint32_t>(it.i), Monomial(nvars), one});
        insert(gens[it.i].terms(), std::move(t));
        continue;
      }
      ++stats.pairs_reduced;
      const auto& gi = elems[it.i].terms();
      const auto& gj = elems[it.j].terms();
      Monomial ui = it.lcm / gi.front().monomial;
      Monomial uj = it.lcm / gj.front().monomial;
      static const std::vector<ModuleTerm> kEmpty;
      std::vector<ModuleTerm> s = merge_shifted(field, merge_shifted(field, kEmpty, 0, gi, 1, ui, 1), 0, gj, 1, uj,
                                                field.neg(1));
      if (track) {
        t = merge_shifted(field, merge_shifted(field, kEmpty, 0, trans[it.i].terms(), 0, ui, 1), 0,
                          trans[it.j].terms(), 0, uj, field.neg(1));
      }
      insert(std::move(s), std::move(t));
    }
  }
};

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const GroebnerOptions& options) {
  if (gens.empty()) throw ArgumentError("buchberger needs at least one generator to fix the ambient module");
  require_compatible(gens);
  GroebnerBuilder b(gens, options);
  b.run();

  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < b.elems.size(); ++k) {
    if (b.active[k]) keep.push_back(k);
  }
  std::sort(keep.begin(), keep.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = b.lead(x);
    const auto& c = b.lead(y);
    return pot_cmp(a.position, a.monomial, c.position, c.monomial) > 0;
  });

  GroebnerBasis basis(b.field, b.nvars, b.rank);
  basis.origin_ = gens;
  for (std::size_t k : keep) {
    basis.elements_.push_back(std::move(b.elems[k]));
    if (options.track) basis.transforms_.push_back(std::move(b.trans[k]));
  }
  basis.index_leads();
  basis.stats_ = b.stats;
  if (auto* o = audit::current()) o->basis(basis);
  return basis;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& options) {
  std::vector<ModuleElement> cols;
  cols.reserve(gens.size());
  for (const auto& g : gens) cols.push_back(ModuleElement::from_polynomial(g));
  return buchberger(cols, options);
}

void GroebnerBasis::index_leads() {
  masks_.clear();
  by_position_.assign(rank_, {});
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const auto& lt = elements_[k].leading_term();
    masks_.push_back(lt.monomial.support_mask());
    by_position_[lt.position].push_back(k);
  }
}

bool GroebnerBasis::is_whole_module() const {
  std::vector<bool> unit(rank_, false);
  for (const auto& e : elements_) {
    const auto& lt = e.leading_term();
    if (lt.monomial.is_one()) unit[lt.position] = true;
  }
  return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

std::optional<std::size_t> GroebnerBasis::find_divisor(std::uint32_t position, const Monomial& m) const {
  if (position >= by_position_.size()) return std::nullopt;
  std::uint32_t mask = m.support_mask();
  for (std::size_t k : by_position_[position]) {
    if ((masks_[k] & ~mask) == 0 && elements_[k].leading_term().monomial.divides(m)) return k;
  }
  return std::nullopt;
}

namespace {

/// Adapter so reduce_fully can search a finished basis.
struct BasisFinder {
  const GroebnerBasis& basis;
  std::size_t find(std::uint32_t position, const Monomial& m) const {
    auto k = basis.find_divisor(position, m);
    return k ? *k : kNone;
  }
};

void check_member(const GroebnerBasis& basis, const ModuleElement& v) {
  if (v.rank() != basis.ambient_rank() || v.nvars() != basis.nvars() || !(v.field() == basis.field())) {
    throw StructuralError("element does not live in the basis' free module");
  }
}

}  // namespace

ModuleElement GroebnerBasis::normal_form(const ModuleElement& v) const {
  check_member(*this, v);
  std::vector<ModuleTerm> rem;
  reduce_fully(field_, v.terms(), elements_, BasisFinder{*this}, nullptr, nullptr, nullptr, rem);
  return make_element(field_, nvars_, rank_, std::move(rem));
}

GroebnerBasis::Division GroebnerBasis::divide(const ModuleElement& v) const {
  check_member(*this, v);
  std::vector<ModuleTerm> rem;
  std::vector<std::vector<Term>> q(elements_.size());
  reduce_fully(field_, v.terms(), elements_, BasisFinder{*this}, nullptr, nullptr, &q, rem);
  Division d{make_element(field_, nvars_, rank_, std::move(rem)), {}};
  d.quotients.reserve(q.size());
  for (auto& terms : q) d.quotients.emplace_back(field_, nvars_, std::move(terms));
  return d;
}

std::vector<ModuleElement> GroebnerBasis::reduced() const {
  std::vector<ModuleElement> out;
  out.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    DivisorIndex index(rank_);
    for (std::size_t o = 0; o < elements_.size(); ++o) {
      if (o != k) index.add(o, elements_[o].leading_term());
    }
    const auto& terms = elements_[k].terms();
    std::vector<ModuleTerm> rem{terms.front()};
    std::vector<ModuleTerm> tail(terms.begin() + 1, terms.end());
    reduce_fully(field_, std::move(tail), elements_, index, nullptr, nullptr, nullptr, rem);
    out.push_back(make_element(field_, nvars_, rank_, std::move(rem)));
  }
  return out;
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& basis) { return basis.normal_form(v); }

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.ambient_rank() != 1) throw StructuralError("polynomial normal form needs a rank-one basis");
  return basis.normal_form(ModuleElement::from_polynomial(f)).component(0);
}

ModuleElement combine_columns(const std::vector<ModuleElement>& columns, const ModuleElement& coefficients,
                              std::size_t target_rank) {
  if (coefficients.rank() != columns.size()) throw StructuralError("coefficient vector has the wrong rank");
  ModuleElement out(coefficients.field(), coefficients.nvars(), target_rank);
  std::vector<std::vector<Term>> parts(columns.size());
  for (const auto& t : coefficients.terms()) parts[t.position].push_back({t.monomial, t.coeff});
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (parts[j].empty()) continue;
    if (columns[j].rank() != target_rank) throw StructuralError("column has the wrong rank");
    for (const auto& t : parts[j]) out.add_scaled(columns[j].times_monomial(t.monomial), t.coeff);
  }
  return out;
}

LiftResult lift_through(const ModuleElement& v, const std::vector<ModuleElement>& gens, const GroebnerBasis& basis) {
  if (!basis.tracked()) throw PreconditionError("lift_through needs a basis computed with tracking");
  if (basis.origin().size() != gens.size()) throw PreconditionError("basis was not computed from these generators");
  auto div = basis.divide(v);
  if (!div.remainder.is_zero()) return {std::nullopt, std::move(div.remainder)};
  ModuleElement coeffs(v.field(), v.nvars(), gens.size());
  for (std::size_t k = 0; k < div.quotients.size(); ++k) {
    if (!div.quotients[k].is_zero()) coeffs += basis.transform(k).times(div.quotients[k]);
  }
  return {coeffs.components(), std::move(div.remainder)};
}

namespace {

/// Canonical representative up to a nonzero scalar.
ModuleElement monic(const ModuleElement& v) {
  if (v.is_zero()) return v;
  return v.scaled(v.field().inv(v.leading_term().coeff));
}

bool term_list_less(const ModuleElement& a, const ModuleElement& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    auto c = pot_cmp(x[i].position, x[i].monomial, y[i].position, y[i].monomial);
    if (c != 0) return c > 0;
    if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff;
  }
  return x.size() < y.size();
}

std::vector<ModuleElement> dedupe(std::vector<ModuleElement> cols) {
  std::vector<ModuleElement> out;
  for (auto& c : cols) {
    if (!c.is_zero()) out.push_back(monic(c));
  }
  std::stable_sort(out.begin(), out.end(), term_list_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SyzygyMatrix syzygies_from_basis(const GroebnerBasis& basis) {
  if (!basis.tracked()) throw PreconditionError("syzygies need a basis computed with tracking");
  const auto& field = basis.field();
  const std::size_t nv = basis.nvars();
  const std::size_t m = basis.origin().size();
  const auto& g = basis.elements();
  const std::size_t n = g.size();

  std::vector<ModuleElement> cols;
  auto to_origin = [&](const std::vector<Polynomial>& coeffs) {
    ModuleElement out(field, nv, m);
    for (std::size_t k = 0; k < n; ++k) {
      if (!coeffs[k].is_zero()) out += basis.transform(k).times(coeffs[k]);
    }
    return out;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& li = g[i].leading_term();
      const auto& lj = g[j].leading_term();
      if (li.position != lj.position) continue;
      Monomial l = lcm(li.monomial, lj.monomial);
      bool redundant = false;
      for (std::size_t k = 0; k < n && !redundant; ++k) {
        if (k == i || k == j) continue;
        const auto& lk = g[k].leading_term();
        if (lk.position != li.position || !lk.monomial.divides(l)) continue;
        if (lcm(li.monomial, lk.monomial) != l && lcm(lj.monomial, lk.monomial) != l) redundant = true;
      }
      if (redundant) continue;
      std::vector<Polynomial> coeffs(n, Polynomial(field, nv));
      if (basis.ambient_rank() == 1 && coprime(li.monomial, lj.monomial)) {
        coeffs[i] = g[j].component(0);
        coeffs[j] = -g[i].component(0);
      } else {
        Monomial ui = l / li.monomial;
        Monomial uj = l / lj.monomial;
        ModuleElement s = g[i].times_monomial(ui) - g[j].times_monomial(uj);
        auto div = basis.divide(s);
        if (!div.remainder.is_zero()) throw InconsistencyError("S-pair of a Groebner basis failed to reduce to zero");
        coeffs = std::move(div.quotients);
        for (auto& q : coeffs) q = -q;
        coeffs[i] += Polynomial::monomial(field, ui);
        coeffs[j] -= Polynomial::monomial(field, uj);
      }
      cols.push_back(to_origin(coeffs));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    auto div = basis.divide(basis.origin()[j]);
    if (!div.remainder.is_zero()) throw InconsistencyError("generator is not in the span of its own basis");
    ModuleElement col = to_origin(div.quotients);
    col = ModuleElement::basis(Polynomial::constant(field, nv, 1), m, j) - col;
    cols.push_back(std::move(col));
  }
  SyzygyMatrix out{m, dedupe(std::move(cols))};
  if (auto* o = audit::current()) o->syzygies(basis, out);
  return out;
}

SyzygyMatrix syzygies(const std::vector<ModuleElement>& gens, const RingSpec& ring) {
  if (gens.empty()) return {0, {}};
  for (const auto& v : gens) {
    if (v.nvars() != ring.nvars() || !(v.field() == ring.field())) {
      throw StructuralError("generators do not live over the given ring");
    }
  }
  return syzygies_from_basis(buchberger(gens, {.track = true}));
}

std::vector<ModuleElement> relation_columns(const RingSpec& ring, std::size_t rank) {
  std::vector<ModuleElement> out;
  for (std::size_t i = 0; i < rank; ++i) {
    for (const auto& f : ring.quotient_relations()) out.push_back(ModuleElement::basis(f, rank, i));
  }
  return out;
}

std::vector<ModuleElement> kernel_of_map(const std::vector<ModuleElement>& columns, std::size_t source_rank,
                                         std::size_t target_rank, const std::vector<ModuleElement>& target_relations,
                                         const RingSpec& ring) {
  if (columns.size() != source_rank) throw StructuralError("map needs one column per source basis vector");
  std::vector<ModuleElement> gens;
  gens.reserve(source_rank + target_relations.size());
  for (const auto& c : columns) {
    if (c.rank() != target_rank) throw StructuralError("column has the wrong rank");
    gens.push_back(c);
  }
  for (const auto& r : target_relations) {
    if (r.rank() != target_rank) throw StructuralError("relation has the wrong rank");
    gens.push_back(r);
  }
  if (source_rank == 0) return {};
  bool all_zero = std::all_of(gens.begin(), gens.end(), [](const ModuleElement& v) { return v.is_zero(); });
  std::vector<ModuleElement> out;
  if (all_zero) {
    for (std::size_t j = 0; j < source_rank; ++j) {
      out.push_back(ModuleElement::basis(ring.one(), source_rank, j));
    }
    return out;
  }
  auto syz = syzygies(gens, ring);
  for (const auto& c : syz.columns) out.push_back(c.projected(0, source_rank));
  return dedupe(std::move(out));
}

std::vector<ModuleElement> irredundant_generators(const std::vector<ModuleElement>& required,
                                                  const std::vector<ModuleElement>& candidates,
                                                  const std::vector<ModuleElement>& modulo) {
  std::vector<ModuleElement> out, span;
  for (const auto& v : required) {
    if (!v.is_zero()) out.push_back(v);
  }
  span = out;
  for (const auto& v : modulo) {
    if (!v.is_zero()) span.push_back(v);
  }
  auto degree = [](const ModuleElement& v) {
    unsigned d = 0;
    for (const auto& t : v.terms()) d = std::max<unsigned>(d, t.monomial.degree());
    return d;
  };
  std::vector<const ModuleElement*> order;
  for (const auto& v : candidates) {
    if (!v.is_zero()) order.push_back(&v);
  }
  std::stable_sort(order.begin(), order.end(), [&](const ModuleElement* a, const ModuleElement* b) {
    auto da = degree(*a), db = degree(*b);
    return da != db ? da < db : a->terms().size() < b->terms().size();
  });
  std::optional<GroebnerBasis> gb;
  for (const ModuleElement* v : order) {
    if (!span.empty()) {
      if (!gb) gb = buchberger(span);
      if (gb->normal_form(*v).is_zero()) continue;
    }
    out.push_back(*v);
    span.push_back(*v);
    gb.reset();
  }
  return out;
}

}  // namespace klab
