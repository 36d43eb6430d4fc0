#include "klab/koszul.hpp"

#include <map>

#include "klab/error.hpp"
#include "klab/fpmodules.hpp"
#include "klab/groebner.hpp"

namespace klab {

std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  if (i > d) return out;
  std::vector<std::size_t> pick(i);
  for (std::size_t k = 0; k < i; ++k) pick[k] = k;
  for (;;) {
    out.push_back(pick);
    std::size_t k = i;
    while (k > 0 && pick[k - 1] == d - i + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t m = k; m < i; ++m) pick[m] = pick[m - 1] + 1;
  }
  return out;
}

ModulePresentation KoszulComplex::term(std::size_t i) const {
  const std::size_t r = module.ambient_rank();
  const std::size_t blocks = ranks.at(i) / (r == 0 ? 1 : r);
  std::vector<ModuleElement> rels;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (const auto& u : module.relations()) rels.push_back(u.embedded(ranks[i], b * r));
  }
  return ModulePresentation(module.ring(), ranks[i], std::move(rels), "K_" + std::to_string(i));
}

KoszulComplex build_koszul(const std::vector<Polynomial>& f, const ModulePresentation& p) {
  if (f.empty()) throw ArgumentError("Koszul complex needs at least one element");
  const RingSpec& ring = p.ring();
  for (const auto& g : f) {
    if (g.nvars() != ring.nvars() || !(g.field() == ring.field())) {
      throw StructuralError("Koszul element does not live over the module's ring");
    }
  }
  const std::size_t d = f.size();
  const std::size_t r = p.ambient_rank();
  KoszulComplex k{f, p, {}, {}};
  std::vector<std::vector<std::vector<std::size_t>>> bases;
  for (std::size_t i = 0; i <= d; ++i) {
    bases.push_back(subsets(d, i));
    k.ranks.push_back(bases.back().size() * r);
  }
  k.differentials.resize(d + 1);
  for (std::size_t i = 1; i <= d; ++i) {
    std::map<std::vector<std::size_t>, std::size_t> lower;
    for (std::size_t idx = 0; idx < bases[i - 1].size(); ++idx) lower[bases[i - 1][idx]] = idx;
    auto& cols = k.differentials[i];
    for (const auto& set : bases[i]) {
      for (std::size_t pos = 0; pos < r; ++pos) {
        ModuleElement col(ring.field(), ring.nvars(), k.ranks[i - 1]);
        for (std::size_t kk = 0; kk < set.size(); ++kk) {
          std::vector<std::size_t> face = set;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(kk));
          Polynomial c = kk % 2 ? -f[set[kk]] : f[set[kk]];
          col += ModuleElement::basis(c, k.ranks[i - 1], lower.at(face) * r + pos);
        }
        cols.push_back(std::move(col));
      }
    }
  }
  return k;
}

ModulePresentation quotient_by_elements(const ModulePresentation& p, const std::vector<Polynomial>& f) {
  std::vector<ModuleElement> rels = p.relations();
  for (const auto& g : f) {
    for (std::size_t i = 0; i < p.ambient_rank(); ++i) rels.push_back(ModuleElement::basis(g, p.ambient_rank(), i));
  }
  return ModulePresentation(p.ring(), p.ambient_rank(), std::move(rels), "M/fM");
}

ModulePresentation koszul_homology(const KoszulComplex& k, std::size_t i) {
  const std::size_t d = k.length();
  if (i > d) throw ArgumentError("Koszul homology index exceeds the sequence length");
  const RingSpec& ring = k.module.ring();
  std::string label = "H_" + std::to_string(i);
  if (i == 0) {
    auto p = quotient_by_elements(k.module, k.elements);
    return ModulePresentation(ring, p.ambient_rank(), p.relations(), label);
  }
  ModulePresentation ki = k.term(i);
  if (k.ranks[i] == 0) return ModulePresentation(ring, 0, {}, label);
  ModulePresentation below = k.term(i - 1);
  std::vector<ModuleElement> ker = kernel_of_map(k.differentials[i], k.ranks[i], k.ranks[i - 1], below.relations(), ring);
  std::vector<ModuleElement> im;
  if (i < d) {
    for (const auto& c : k.differentials[i + 1]) {
      if (!c.is_zero()) im.push_back(c);
    }
  }
  return subquotient_presentation(irredundant_generators(im, ker, ki.relations()), im, ki, label);
}

LengthCertificate koszul_homology_length(const KoszulComplex& k, std::size_t i, unsigned cap) {
  return module_local_colength(koszul_homology(k, i), cap);
}

CohomologyProfile koszul_cohomology_profile(const std::vector<Polynomial>& f, const ModulePresentation& p,
                                            unsigned cap) {
  KoszulComplex k = build_koszul(f, p);
  const std::size_t d = k.length();
  CohomologyProfile out;
  for (std::size_t i = 0; i <= d; ++i) out.cohomology.push_back(koszul_homology_length(k, d - i, cap));
  out.top_direct = module_local_colength(quotient_by_elements(p, f), cap);
  out.top_consistent = out.top_direct.value == out.cohomology[d].value &&
                       out.top_direct.status == out.cohomology[d].status;
  return out;
}

}  // namespace klab
