#include "klab/colength.hpp"

#include <algorithm>
#include <unordered_map>

#include "klab/audit.hpp"
#include "klab/error.hpp"

namespace klab {

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint32_t, Monomial>& k) const noexcept {
    return k.second.hash() * 1000003u ^ k.first;
  }
};

using IndexMap = std::unordered_map<std::pair<std::uint32_t, Monomial>, std::uint32_t, KeyHash>;

ModulePresentation ideal_presentation(const std::vector<Polynomial>& ideal, const RingSpec& ring) {
  std::vector<ModuleElement> cols;
  cols.reserve(ideal.size());
  for (const auto& g : ideal) {
    if (g.nvars() != ring.nvars() || !(g.field() == ring.field())) {
      throw StructuralError("ideal generator does not live over the ring");
    }
    cols.push_back(ModuleElement::from_polynomial(g));
  }
  return ModulePresentation(ring, 1, std::move(cols), "S/I");
}

std::vector<ModuleElement> all_relations_with_power(const ModulePresentation& p, unsigned n) {
  std::vector<ModuleElement> gens = p.relations();
  const auto& ring = p.ring();
  for (const auto& m : monomials_of_degree(ring.nvars(), n)) {
    for (std::size_t i = 0; i < p.ambient_rank(); ++i) {
      gens.push_back(ModuleElement::basis(Polynomial::monomial(ring.field(), m), p.ambient_rank(), i));
    }
  }
  return gens;
}

bool standard_in(const GroebnerBasis& gb, std::uint32_t pos, const Monomial& m) {
  return !gb.find_divisor(pos, m).has_value();
}

/// Visits each standard monomial of `pos` once; stops early when visit returns false.
template <class Visit>
bool for_each_standard(const GroebnerBasis& gb, std::uint32_t pos, std::size_t nvars, Visit&& visit) {
  Monomial one(nvars);
  if (!standard_in(gb, pos, one)) return true;
  std::vector<std::pair<Monomial, std::size_t>> stack{{one, 0}};
  while (!stack.empty()) {
    auto [m, from] = stack.back();
    stack.pop_back();
    if (!visit(m)) return false;
    for (std::size_t v = from; v < nvars; ++v) {
      Monomial next = m * Monomial::variable(nvars, v);
      if (standard_in(gb, pos, next)) stack.push_back({next, v});
    }
  }
  return true;
}

/// Every position either carries a unit leading term or pure powers of all variables.
bool quotient_is_finite(const GroebnerBasis& gb) {
  const std::size_t nv = gb.nvars();
  std::vector<std::vector<bool>> pure(gb.ambient_rank(), std::vector<bool>(nv, false));
  std::vector<bool> dead(gb.ambient_rank(), false);
  for (const auto& e : gb.elements()) {
    const auto& lt = e.leading_term();
    if (lt.monomial.is_one()) {
      dead[lt.position] = true;
      continue;
    }
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      if (lt.monomial[v]) {
        ++support;
        var = v;
      }
    }
    if (support == 1) pure[lt.position][var] = true;
  }
  for (std::size_t p = 0; p < gb.ambient_rank(); ++p) {
    if (dead[p]) continue;
    if (!std::all_of(pure[p].begin(), pure[p].end(), [](bool b) { return b; })) return false;
  }
  return true;
}

LengthCertificate finish(LengthCertificate c, unsigned cap) {
  // locate the first N with h(N) = h(N+1) among the samples
  for (std::size_t k = 0; k + 1 < c.samples.size(); ++k) {
    auto [n, h] = c.samples[k];
    auto [n1, h1] = c.samples[k + 1];
    if (n1 == n + 1 && h == h1) {
      c.truncation_degree = n;
      c.witness = {h, h1};
      c.value = h;
      c.status = n <= cap ? LengthStatus::kCertified : LengthStatus::kCapExceeded;
      if (c.status == LengthStatus::kCapExceeded) break;
      return c;
    }
  }
  c.status = LengthStatus::kCapExceeded;
  c.truncation_degree = cap;
  std::uint64_t last = 0;
  for (auto [n, h] : c.samples) {
    if (n <= cap) last = h;
  }
  c.value = last;
  c.witness = {last, last};
  return c;
}

LengthCertificate by_filtration(const FiniteQuotient& q, const PrimeField& field, unsigned cap) {
  LengthCertificate c;
  c.method = LengthMethod::kFiltration;
  const std::size_t d = q.dimension();
  std::vector<SparseVector> w;
  w.reserve(d);
  for (std::uint32_t i = 0; i < d; ++i) w.push_back({{i, 1}});
  std::size_t prev_rank = d;
  for (unsigned n = 1;; ++n) {
    EchelonBasis next(field, d);
    for (const auto& vec : w) {
      for (const auto& x : q.multiplication) {
        next.insert(apply(x, vec, field));
        if (next.rank() == prev_rank) break;
      }
      if (next.rank() == prev_rank) break;
    }
    c.samples.push_back({n, static_cast<std::uint64_t>(d - next.rank())});
    // W_n ⊆ W_{n-1}: equal rank means equal spaces, so h(n) = h(n-1) and the chain is stable.
    if (n >= 2 && next.rank() == prev_rank) break;
    if (n > cap + 1) break;
    if (next.rank() == prev_rank) {
      // h(1) = h(0) = 0 only for the zero module; record h(2) as well.
      c.samples.push_back({n + 1, c.samples.back().second});
      break;
    }
    prev_rank = next.rank();
    w = next.rows();
  }
  return finish(std::move(c), cap);
}

LengthCertificate by_probing(const ModulePresentation& p, unsigned cap, LengthMethod method) {
  LengthCertificate c;
  c.method = method;
  std::vector<std::pair<unsigned, std::uint64_t>> cache;
  auto h = [&](unsigned n) {
    for (auto [k, v] : cache) {
      if (k == n) return v;
    }
    std::uint64_t v = method == LengthMethod::kLinearAlgebra ? dim_quotient_at(p, n) : dim_quotient_truncated_basis(p, n);
    cache.push_back({n, v});
    return v;
  };
  auto stable = [&](unsigned n) { return h(n) == h(n + 1); };
  // exponential search for a stable N, then bisection for the first one
  unsigned lo = 0, hi = 1;
  while (!stable(hi)) {
    lo = hi;
    if (hi > cap) break;
    hi = std::min(hi * 2, cap + 1);
    if (hi == lo) break;
  }
  if (stable(hi)) {
    while (hi - lo > 1) {
      unsigned mid = lo + (hi - lo) / 2;
      if (stable(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  std::sort(cache.begin(), cache.end());
  c.samples = std::move(cache);
  return finish(std::move(c), cap);
}

}  // namespace

std::string to_string(LengthStatus s) { return s == LengthStatus::kCertified ? "certified" : "cap_exceeded"; }

std::string to_string(LengthMethod m) {
  switch (m) {
    case LengthMethod::kAuto:
      return "auto";
    case LengthMethod::kFiltration:
      return "filtration";
    case LengthMethod::kTruncatedBasis:
      return "truncated-basis";
    case LengthMethod::kLinearAlgebra:
      return "linear-algebra";
  }
  return "unknown";
}

bool certificate_consistent(const LengthCertificate& c) {
  if (c.truncation_degree < 1) return false;
  for (std::size_t k = 0; k + 1 < c.samples.size(); ++k) {
    if (c.samples[k].first >= c.samples[k + 1].first) return false;
    if (c.samples[k].second > c.samples[k + 1].second) return false;
  }
  if (c.status != LengthStatus::kCertified) return true;
  if (c.witness.first != c.witness.second || c.witness.first != c.value) return false;
  bool found_n = false, found_n1 = false;
  for (auto [n, h] : c.samples) {
    if (n == c.truncation_degree) found_n = h == c.value;
    if (n == c.truncation_degree + 1) found_n1 = h == c.value;
    // Nakayama: nothing after the certificate may grow.
    if (n > c.truncation_degree && h != c.value) return false;
  }
  return found_n && found_n1;
}

std::uint64_t dim_quotient_at(const std::vector<Polynomial>& ideal, const RingSpec& ring, unsigned n) {
  return dim_quotient_at(ideal_presentation(ideal, ring), n);
}

std::uint64_t dim_quotient_at(const ModulePresentation& p, unsigned n) {
  if (n == 0) return 0;
  const auto& ring = p.ring();
  const std::size_t nv = ring.nvars();
  IndexMap index;
  std::vector<std::vector<Monomial>> by_degree(n);
  for (unsigned d = 0; d < n; ++d) by_degree[d] = monomials_of_degree(nv, d);
  std::uint32_t cols = 0;
  for (std::uint32_t pos = 0; pos < p.ambient_rank(); ++pos) {
    for (unsigned d = 0; d < n; ++d) {
      for (const auto& m : by_degree[d]) index.emplace(std::make_pair(pos, m), cols++);
    }
  }
  EchelonBasis basis(ring.field(), cols);
  for (const auto& g : p.relations()) {
    auto val = g.valuation();
    if (!val || *val >= n) continue;
    for (unsigned d = 0; d < n - *val; ++d) {
      for (const auto& u : by_degree[d]) {
        SparseVector row;
        for (const auto& t : g.terms()) {
          if (t.monomial.degree() + d >= n) continue;
          row.push_back({index.at({t.position, t.monomial * u}), t.coeff});
        }
        std::sort(row.begin(), row.end());
        basis.insert(row);
        if (basis.rank() == cols) return 0;
      }
    }
  }
  return cols - basis.rank();
}

std::optional<std::uint64_t> count_standard_monomials(const GroebnerBasis& gb, std::uint64_t limit) {
  if (!quotient_is_finite(gb)) return std::nullopt;
  std::uint64_t count = 0;
  for (std::uint32_t pos = 0; pos < gb.ambient_rank(); ++pos) {
    bool ok = for_each_standard(gb, pos, gb.nvars(), [&](const Monomial&) { return ++count <= limit; });
    if (!ok) return std::nullopt;
  }
  return count;
}

std::uint64_t dim_quotient_truncated_basis(const ModulePresentation& p, unsigned n) {
  if (n == 0) return 0;
  auto gb = buchberger(all_relations_with_power(p, n));
  auto count = count_standard_monomials(gb);
  if (!count) throw InconsistencyError("truncated quotient is not finite");
  return *count;
}

std::optional<FiniteQuotient> finite_quotient(const GroebnerBasis& gb, std::size_t max_dimension) {
  if (!quotient_is_finite(gb)) return std::nullopt;
  FiniteQuotient q;
  q.rank = gb.ambient_rank();
  const std::size_t nv = gb.nvars();
  for (std::uint32_t pos = 0; pos < gb.ambient_rank(); ++pos) {
    bool ok = for_each_standard(gb, pos, nv, [&](const Monomial& m) {
      q.basis.push_back({pos, m});
      return q.basis.size() <= max_dimension;
    });
    if (!ok) return std::nullopt;
  }
  std::sort(q.basis.begin(), q.basis.end(), [](const auto& a, const auto& b) {
    return pot_cmp(a.first, a.second, b.first, b.second) < 0;
  });
  IndexMap index;
  for (std::uint32_t i = 0; i < q.basis.size(); ++i) index.emplace(q.basis[i], i);
  q.multiplication.assign(nv, SparseMatrix{q.basis.size(), {}});
  for (std::size_t v = 0; v < nv; ++v) {
    auto& cols = q.multiplication[v].columns;
    cols.reserve(q.basis.size());
    Monomial xv = Monomial::variable(nv, v);
    for (const auto& [pos, m] : q.basis) {
      Monomial next = m * xv;
      auto it = index.find({pos, next});
      if (it != index.end()) {
        cols.push_back({{it->second, 1}});
        continue;
      }
      ModuleElement e(gb.field(), nv, gb.ambient_rank(), {{pos, next, 1}});
      ModuleElement nf = gb.normal_form(e);
      SparseVector col;
      for (const auto& t : nf.terms()) col.push_back({index.at({t.position, t.monomial}), t.coeff});
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
  }
  return q;
}

LengthCertificate local_colength(const std::vector<Polynomial>& ideal, const RingSpec& ring, unsigned cap) {
  return local_colength(ideal, ring, LengthOptions{cap, LengthMethod::kAuto});
}

LengthCertificate local_colength(const std::vector<Polynomial>& ideal, const RingSpec& ring,
                                 const LengthOptions& options) {
  return module_local_colength(ideal_presentation(ideal, ring), options);
}

LengthCertificate module_local_colength(const ModulePresentation& p, unsigned cap) {
  return module_local_colength(p, LengthOptions{cap, LengthMethod::kAuto});
}

namespace {

LengthCertificate compute_colength(const ModulePresentation& p, const LengthOptions& options) {
  if (options.cap < 2) throw ArgumentError("length cap must be at least 2");
  if (p.ambient_rank() == 0) {
    LengthCertificate c;
    c.samples = {{1, 0}, {2, 0}};
    c.method = options.method;
    return finish(std::move(c), options.cap);
  }
  if (options.method == LengthMethod::kLinearAlgebra || options.method == LengthMethod::kTruncatedBasis) {
    return by_probing(p, options.cap, options.method);
  }
  std::optional<FiniteQuotient> q;
  bool graded = true;
  if (!p.relations().empty()) {
    auto gb = buchberger(p.relations());
    q = finite_quotient(gb);
    graded = std::all_of(gb.elements().begin(), gb.elements().end(),
                         [](const ModuleElement& g) { return g.is_homogeneous(); });
  }
  if (q) return by_filtration(*q, p.ring().field(), options.cap);
  if (options.method == LengthMethod::kFiltration) throw PreconditionError("quotient is not finite-dimensional");
  if (graded) {
    // Graded and infinite-dimensional: h(N+1) - h(N) is the Hilbert function
    // in degree N, which never vanishes, so no cap can certify.
    LengthCertificate c;
    c.method = LengthMethod::kTruncatedBasis;
    for (unsigned n = 1; n <= 2; ++n) c.samples.push_back({n, dim_quotient_truncated_basis(p, n)});
    c.status = LengthStatus::kCapExceeded;
    c.truncation_degree = options.cap;
    c.value = c.samples.back().second;
    c.witness = {c.value, c.value};
    return c;
  }
  return by_probing(p, options.cap, LengthMethod::kTruncatedBasis);
}

}  // namespace

LengthCertificate module_local_colength(const ModulePresentation& p, const LengthOptions& options) {
  auto c = compute_colength(p, options);
  if (auto* o = audit::current()) o->certificate(c);
  return c;
}

GrowthEstimate growth_degree(const ModulePresentation& p, unsigned window, unsigned start) {
  if (window < 4) throw ArgumentError("growth window must be at least 4");
  if (start < 1) throw ArgumentError("growth sampling starts at N = 1");
  GrowthEstimate g;
  g.first_degree = start;
  std::optional<FiniteQuotient> q;
  if (!p.relations().empty()) q = finite_quotient(buchberger(p.relations()));
  if (q) {
    auto c = by_filtration(*q, p.ring().field(), start + window + 1);
    if (c.certified()) {
      for (unsigned n = start; n < start + window; ++n) {
        std::uint64_t h = c.value;
        for (auto [k, v] : c.samples) {
          if (k == n) h = v;
        }
        g.dims.push_back(h);
      }
    }
  }
  if (g.dims.empty()) {
    for (unsigned n = start; n < start + window; ++n) g.dims.push_back(dim_quotient_truncated_basis(p, n));
  }
  std::vector<std::int64_t> diff(g.dims.begin(), g.dims.end());
  for (int k = 0; diff.size() >= 3; ++k) {
    std::size_t m = diff.size();
    bool constant = diff[m - 1] == diff[m - 2] && diff[m - 2] == diff[m - 3];
    if (constant && diff[m - 1] >= 0 && (diff[m - 1] > 0 || k == 0)) {
      g.degree = k;
      g.leading_difference = static_cast<std::uint64_t>(diff[m - 1]);
      g.status = GrowthStatus::kStable;
      return g;
    }
    std::vector<std::int64_t> next;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
    diff = std::move(next);
  }
  return g;
}

}  // namespace klab
