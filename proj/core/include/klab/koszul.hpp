#pragma once

#include <cstddef>
#include <vector>

#include "klab/colength.hpp"
#include "klab/module_presentation.hpp"

namespace klab {

/// Homological Koszul complex K_d -> ... -> K_0 of f_1..f_d on a presented module.
///
/// K_i = M^{C(d,i)}, basis e_J (J an i-subset of {0..d-1} in lexicographic
/// order) tensored with the generators of M; index = rank(J) * r + p.
/// d(e_J) = sum_k (-1)^k f_{j_k} e_{J \ j_k} with k counted from zero.
struct KoszulComplex {
  std::vector<Polynomial> elements;
  ModulePresentation module;
  std::vector<std::size_t> ranks;
  /// differentials[i] : K_i -> K_{i-1} for i = 1..d; differentials[0] is empty.
  std::vector<std::vector<ModuleElement>> differentials;

  std::size_t length() const noexcept { return elements.size(); }
  /// K_i as a presented module (relations of M on every summand).
  ModulePresentation term(std::size_t i) const;
};

KoszulComplex build_koszul(const std::vector<Polynomial>& f, const ModulePresentation& p);

/// Presentation of the homology H_i = ker d_i / im d_{i+1}.
ModulePresentation koszul_homology(const KoszulComplex& k, std::size_t i);

/// ℓ(H_i(f; M)) (homological index).
LengthCertificate koszul_homology_length(const KoszulComplex& k, std::size_t i, unsigned cap = kDefaultLengthCap);

/// Cohomological lengths ℓ(H^i) = ℓ(H_{d-i}) for i = 0..d, plus the direct
/// computation of ℓ(M/fM) used to cross-check H^d.
struct CohomologyProfile {
  std::vector<LengthCertificate> cohomology;
  LengthCertificate top_direct;
  bool top_consistent = false;
};

CohomologyProfile koszul_cohomology_profile(const std::vector<Polynomial>& f, const ModulePresentation& p,
                                            unsigned cap = kDefaultLengthCap);

/// M / (f) M as a presentation.
ModulePresentation quotient_by_elements(const ModulePresentation& p, const std::vector<Polynomial>& f);

/// Lexicographically ordered i-subsets of {0..d-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t i);

}  // namespace klab
