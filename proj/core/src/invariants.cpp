#include "klab/invariants.hpp"

#include "klab/error.hpp"

namespace klab {

namespace {

ModulePresentation ring_module(const RingSpec& ring) { return quotient_presentation({}, ring); }

std::vector<std::int64_t> differences(const std::vector<std::uint64_t>& xs, int order) {
  std::vector<std::int64_t> d(xs.begin(), xs.end());
  for (int k = 0; k < order && !d.empty(); ++k) {
    std::vector<std::int64_t> next;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) next.push_back(d[i + 1] - d[i]);
    d = std::move(next);
  }
  return d;
}

/// Reduced Gröbner basis of an ideal as a plain generator list.
std::vector<Polynomial> reduced_generators(const std::vector<Polynomial>& gens) {
  auto gb = buchberger(gens);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) out.push_back(g.component(0));
  return out;
}

}  // namespace

std::string to_string(MultiplicityStatus s) { return s == MultiplicityStatus::kStabilized ? "stabilized" : "unstable"; }

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::kYes: return "yes";
    case Finiteness::kNo: return "no";
    case Finiteness::kSemi: return "semi";
  }
  return "semi";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int local_dimension(const ModulePresentation& p) {
  auto sd = support_dimension(p);
  if (sd.dimension <= 0 || sd.conical) return std::max(sd.dimension, 0);
  auto g = growth_degree(p, 6);
  if (g.status == GrowthStatus::kStable) return g.degree;
  return sd.dimension;
}

std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& ideal, unsigned k) {
  if (ideal.empty()) throw ArgumentError("power of an empty generator list");
  // (generator, index of its last factor) so each product is formed once.
  std::vector<std::pair<Polynomial, std::size_t>> cur;
  cur.emplace_back(Polynomial::constant(ideal[0].field(), ideal[0].nvars(), 1), 0);
  for (unsigned step = 0; step < k; ++step) {
    std::vector<std::pair<Polynomial, std::size_t>> next;
    for (const auto& [g, last] : cur) {
      for (std::size_t j = last; j < ideal.size(); ++j) next.emplace_back(g * ideal[j], j);
    }
    cur = std::move(next);
  }
  std::vector<Polynomial> out;
  for (auto& [g, last] : cur) {
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

MultiplicityEstimate hs_multiplicity(const std::vector<Polynomial>& ideal, const ModulePresentation& p,
                                     const MultiplicityOptions& options) {
  if (ideal.empty()) throw ArgumentError("multiplicity needs a nonempty ideal");
  auto first = module_local_colength(quotient_by_elements(p, ideal), options.cap);
  if (!first.certified()) throw PreconditionError("the ideal is not certified m-primary on the module");
  MultiplicityEstimate e;
  e.dimension = options.dimension.value_or(local_dimension(p));
  const unsigned window = options.window ? options.window : static_cast<unsigned>(e.dimension) + 4;
  e.lengths.push_back(first.value);
  // m^c P ⊆ IP locally for the certificate degree c. Then J = I + m^c agrees
  // with I at the origin and J^k contains m^{ck}, so P/J^k P is finite and
  // its dimension is the local length of P/I^k P. When P/IP already lives
  // only at the origin, I itself plays the role of J.
  const unsigned c = first.truncation_degree;
  auto global = count_standard_monomials(buchberger(quotient_by_elements(p, ideal).relations()));
  std::vector<Polynomial> j = ideal;
  if (!global || *global != first.value) {
    for (const auto& m : monomials_of_degree(p.ring().nvars(), c)) {
      j.push_back(Polynomial(p.ring().field(), p.ring().nvars(), {{m, 1}}));
    }
  }
  const std::vector<Polynomial> base = reduced_generators(j);
  std::vector<Polynomial> power = base;
  for (unsigned k = 2; k <= window; ++k) {
    std::vector<Polynomial> next;
    for (const auto& a : power) {
      for (const auto& b : base) next.push_back(a * b);
    }
    power = reduced_generators(next);
    auto n = count_standard_monomials(buchberger(quotient_by_elements(p, power).relations()));
    if (!n) throw InconsistencyError("power of an m-primary ideal has infinite colength");
    e.lengths.push_back(*n);
  }
  e.differences_window = differences(e.lengths, e.dimension);
  const auto& w = e.differences_window;
  if (w.size() >= 3 && w[w.size() - 1] == w[w.size() - 2] && w[w.size() - 2] == w[w.size() - 3] && w.back() >= 0) {
    e.status = MultiplicityStatus::kStabilized;
    e.value = static_cast<std::uint64_t>(w.back());
  }
  return e;
}

SerreReport serre_check(const std::vector<Polynomial>& f, const ModulePresentation& p,
                        const MultiplicityOptions& options) {
  int dim = options.dimension.value_or(local_dimension(p));
  if (static_cast<int>(f.size()) != dim) {
    throw PreconditionError("a system of parameters needs " + std::to_string(dim) + " elements, got " +
                            std::to_string(f.size()));
  }
  MultiplicityOptions mo = options;
  mo.dimension = dim;
  SerreReport r;
  r.multiplicity = hs_multiplicity(f, p, mo);
  auto profile = koszul_cohomology_profile(f, p, options.cap);
  bool certified = profile.top_consistent;
  const std::size_t d = f.size();
  for (const auto& c : profile.cohomology) {
    r.lengths.push_back(c.value);
    certified = certified && c.certified();
  }
  for (std::size_t j = 0; j <= d; ++j) {
    auto v = static_cast<std::int64_t>(r.lengths[d - j]);
    r.alternating_sum += j % 2 ? -v : v;
  }
  r.conclusive = certified && r.multiplicity.stabilized();
  r.pass = r.conclusive && r.alternating_sum == static_cast<std::int64_t>(r.multiplicity.value);
  return r;
}

LechReport lech_check(const std::vector<Polynomial>& ideal, const RingSpec& ring, const MultiplicityOptions& options) {
  auto rm = ring_module(ring);
  auto len = local_colength(ideal, ring, options.cap);
  if (!len.certified()) throw PreconditionError("the ideal is not certified m-primary");
  LechReport r;
  r.colength = len.value;
  r.dimension = options.dimension.value_or(local_dimension(rm));
  MultiplicityOptions mo = options;
  mo.dimension = r.dimension;
  auto ei = hs_multiplicity(ideal, rm, mo);
  std::vector<Polynomial> m;
  for (std::size_t v = 0; v < ring.nvars(); ++v) m.push_back(ring.var(v));
  auto em = hs_multiplicity(m, rm, mo);
  r.e_ideal = ei.value;
  r.e_maximal = em.value;
  std::uint64_t fact = 1;
  for (int k = 2; k <= r.dimension; ++k) fact *= static_cast<std::uint64_t>(k);
  r.lhs = r.e_ideal;
  r.rhs = fact * r.e_maximal * r.colength;
  r.conclusive = ei.stabilized() && em.stabilized();
  r.pass = r.conclusive && r.lhs <= r.rhs;
  return r;
}

FinitenessProfile lc_finiteness_profile(const ModulePresentation& p, unsigned cap) {
  FinitenessProfile out;
  out.dimension = local_dimension(p);
  const std::size_t big_d = p.ring().nvars();
  out.certified_asydepth = -1;
  for (int i = 0; i <= out.dimension; ++i) {
    FinitenessEntry e;
    e.index = static_cast<std::size_t>(i);
    e.ext_index = big_d - e.index;
    auto ext = ext_module(p, e.ext_index);
    e.support = support_dimension(ext);
    if (e.support->dimension <= 0) {
      e.length = module_local_colength(ext, cap);
      e.finite = e.length->certified() ? Finiteness::kYes : Finiteness::kSemi;
    } else if (e.support->conical) {
      e.finite = Finiteness::kNo;
    } else {
      // Components away from the origin do not matter; a certified local length settles it.
      auto c = module_local_colength(ext, cap);
      if (c.certified()) {
        e.length = c;
        e.finite = Finiteness::kYes;
      } else {
        e.growth = growth_degree(ext, 6);
        e.finite = Finiteness::kSemi;
      }
    }
    if (e.finite != Finiteness::kYes && out.certified_asydepth < 0) {
      out.certified_asydepth = i;
      out.semi = e.finite == Finiteness::kSemi;
    }
    out.entries.push_back(std::move(e));
  }
  if (out.certified_asydepth < 0 || out.certified_asydepth > out.dimension) out.certified_asydepth = out.dimension;
  return out;
}

AsydepthResult certified_asydepth(const ModulePresentation& p, unsigned cap) {
  int dim_ring = local_dimension(ring_module(p.ring()));
  int dim_p = local_dimension(p);
  if (dim_p != dim_ring) {
    throw PreconditionError("asymptotic depth needs dim P = dim R (" + std::to_string(dim_p) + " vs " +
                            std::to_string(dim_ring) + ")");
  }
  AsydepthResult r;
  r.profile = lc_finiteness_profile(p, cap);
  r.value = r.profile.certified_asydepth;
  r.semi = r.profile.semi;
  return r;
}

BackwardBoundReport backward_bound_check(const ModulePresentation& p, const std::vector<Polynomial>& f,
                                         std::size_t i, unsigned cap) {
  const std::size_t d = f.size();
  if (i > d) throw ArgumentError("index exceeds the number of parameters");
  BackwardBoundReport r;
  auto profile = lc_finiteness_profile(p, cap);
  std::uint64_t bound = 0;
  for (std::size_t j = 0; j <= i; ++j) {
    if (j >= profile.entries.size()) {
      // Ext^{D-j} with j above dim P vanishes.
      continue;
    }
    const auto& e = profile.entries[j];
    if (e.finite != Finiteness::kYes || !e.length) return r;
    bound += binomial(d, i - j) * e.length->value;
  }
  r.applicable = true;
  r.bound = bound;
  auto k = build_koszul(f, p);
  auto c = koszul_homology_length(k, d - i, cap);
  r.measured = c.value;
  r.pass = c.certified() && r.measured <= r.bound;
  return r;
}

std::vector<SeriesRow> effaceability_series(const std::function<FamilyInstance(unsigned)>& family,
                                            const std::string& target, std::size_t i, unsigned n_first,
                                            unsigned n_last, unsigned cap) {
  std::vector<SeriesRow> rows;
  for (unsigned n = n_first; n <= n_last; ++n) {
    SeriesRow row;
    row.n = n;
    try {
      FamilyInstance inst = family(n);
      row.t = inst.parameters.t;
      const auto& m = inst.target(target).module;
      auto k = build_koszul(inst.ideal, m);
      if (i > k.length()) throw ArgumentError("index exceeds the number of parameters");
      auto hi = koszul_homology_length(k, k.length() - i, cap);
      auto ri = local_colength(inst.ideal, inst.ring, cap);
      auto mi = module_local_colength(quotient_by_elements(m, inst.ideal), cap);
      row.len_hi = hi.value;
      row.len_r_mod_i = ri.value;
      row.len_m_mod_im = mi.value;
      row.cert_n = hi.truncation_degree;
      row.complete = hi.certified() && ri.certified() && mi.certified();
      if (!row.complete) row.error = "cap exceeded";
    } catch (const Error& e) {
      row.complete = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace klab
