#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "klab/fpmodules.hpp"
#include "klab/groebner.hpp"
#include "klab/parse.hpp"
#include "klab/ring.hpp"

namespace klab::testing {

inline RingSpec make_ring(const std::string& vars, const std::string& relations = "",
                          std::uint64_t prime = PrimeField::kDefaultModulus,
                          std::optional<std::string> proxy = std::nullopt) {
  RingSpec bare(PrimeField(prime), parse_variable_list(vars), {}, proxy);
  return bare.with_relations(parse_poly_list(relations, bare));
}

inline Polynomial P(const RingSpec& r, const std::string& text) { return parse_poly(text, r); }
inline std::vector<Polynomial> PL(const RingSpec& r, const std::string& text) { return parse_poly_list(text, r); }

inline ModuleElement V(const RingSpec& r, const std::vector<std::string>& comps) {
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(parse_poly(c, r));
  return ModuleElement(std::span<const Polynomial>(ps));
}

inline ModulePresentation ring_of(const RingSpec& r) { return quotient_presentation({}, r); }

inline ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  const std::size_t rank = a.ambient_rank() + b.ambient_rank();
  std::vector<ModuleElement> rels;
  for (const auto& u : a.relations()) rels.push_back(u.embedded(rank, 0));
  for (const auto& u : b.relations()) rels.push_back(u.embedded(rank, a.ambient_rank()));
  return ModulePresentation(a.ring(), rank, std::move(rels));
}

/// Independent polynomial model: exponent vector -> coefficient mod p, no ordering.
using Dense = std::map<std::vector<unsigned>, std::int64_t>;

inline Dense to_dense(const Polynomial& f) {
  Dense d;
  for (const auto& t : f.terms()) {
    std::vector<unsigned> e(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) e[i] = t.monomial[i];
    d[e] = t.coeff;
  }
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b, std::int64_t p) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] = (out[e] + ca * cb) % p;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Random polynomial with `terms` terms of degree <= max_degree.
inline Polynomial random_poly(const RingSpec& r, std::mt19937_64& rng, unsigned terms, unsigned max_degree,
                              unsigned min_degree = 0) {
  std::vector<Term> ts;
  std::uniform_int_distribution<unsigned> coeff(1, r.field().modulus() - 1);
  std::uniform_int_distribution<unsigned> deg(min_degree, max_degree);
  for (unsigned k = 0; k < terms; ++k) {
    unsigned d = deg(rng);
    Monomial m(r.nvars());
    for (unsigned s = 0; s < d; ++s) {
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, r.nvars() - 1)(rng);
      m.set(v, m[v] + 1);
    }
    ts.push_back({m, coeff(rng)});
  }
  return Polynomial(r.field(), r.nvars(), std::move(ts));
}

/// Brute-force Euclid by search; independent of the field implementation.
inline std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t b = 1; b < p; ++b) {
    if (a * b % p == 1) return b;
  }
  return 0;
}

/// Dense matrix rank mod p by column-major elimination from the last column,
/// deliberately structured differently from the library routine.
inline std::size_t oracle_rank(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  if (rows.empty()) return 0;
  std::size_t width = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = width; col-- > 0;) {
    std::size_t piv = rank;
    while (piv < rows.size() && ((rows[piv][col] % p) + p) % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      std::int64_t a = ((rows[rank][col] % p) + p) % p;
      std::int64_t b = ((rows[r][col] % p) + p) % p;
      if (b == 0) continue;
      // row_r <- a*row_r - b*row_rank (fraction-free)
      for (std::size_t c = 0; c < width; ++c) rows[r][c] = ((a * rows[r][c] - b * rows[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// True when every S-pair of the basis reduces to zero (checked by a plain
/// top-reduction loop written here, not the library's normal form).
inline bool spairs_reduce_to_zero(const GroebnerBasis& gb) {
  const auto& g = gb.elements();
  auto reduce = [&](ModuleElement f) {
    ModuleElement rem(gb.field(), gb.nvars(), gb.ambient_rank());
    while (!f.is_zero()) {
      const auto lt = f.leading_term();
      bool reduced = false;
      for (const auto& e : g) {
        const auto& le = e.leading_term();
        if (le.position == lt.position && le.monomial.divides(lt.monomial)) {
          Coeff c = gb.field().mul(lt.coeff, gb.field().inv(le.coeff));
          f -= e.times_monomial(lt.monomial / le.monomial, c);
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        ModuleElement head(gb.field(), gb.nvars(), gb.ambient_rank(), {lt});
        rem += head;
        f -= head;
      }
    }
    return rem;
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto& a = g[i].leading_term();
      const auto& b = g[j].leading_term();
      if (a.position != b.position) continue;
      Monomial l = lcm(a.monomial, b.monomial);
      Coeff ca = gb.field().inv(a.coeff), cb = gb.field().inv(b.coeff);
      ModuleElement s = g[i].times_monomial(l / a.monomial, ca) - g[j].times_monomial(l / b.monomial, cb);
      if (!reduce(s).is_zero()) return false;
    }
  }
  for (const auto& o : gb.origin()) {
    if (!reduce(o).is_zero()) return false;
  }
  return true;
}

/// Matrix-vector product computed componentwise via polynomial products.
inline ModuleElement apply_columns(const std::vector<ModuleElement>& cols, const ModuleElement& v,
                                   std::size_t target_rank) {
  ModuleElement out(v.field(), v.nvars(), target_rank);
  auto coeffs = v.components();
  for (std::size_t j = 0; j < cols.size(); ++j) out += cols[j].times(coeffs[j]);
  return out;
}

}  // namespace klab::testing
