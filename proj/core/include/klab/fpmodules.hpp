#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "klab/groebner.hpp"
#include "klab/module_presentation.hpp"

namespace klab {

/// R/J as a cyclic module: relations J together with the quotient relations.
ModulePresentation quotient_presentation(const std::vector<Polynomial>& j, const RingSpec& ring);

/// The ideal generated by `gens` in R = S/(quotient relations) as an
/// R-module: one generator per entry, relations = syzygies over R.
ModulePresentation present_ideal_module(const std::vector<Polynomial>& gens, const RingSpec& ring);

/// Free resolution over the ambient polynomial ring S:
/// F_0 <- F_1 <- ... with maps[k] : F_{k+1} -> F_k given by ranks[k+1]
/// columns of rank ranks[k]. Unit entries are pruned, so ranks are minimal
/// for graded input.
struct FreeResolution {
  RingSpec ring;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<ModuleElement>> maps;

  std::size_t length() const noexcept { return maps.size(); }
};

/// Resolution with at most `length` maps (stops early when a free module is zero).
FreeResolution free_resolution(const ModulePresentation& p, std::size_t length);

/// Presentation of Ext^j_S(P, S) over S, from the dual of a free resolution.
/// Throws ArgumentError unless 0 <= j <= number of variables.
ModulePresentation ext_module(const ModulePresentation& p, std::size_t j);

/// <kernel_gens> / (<image_gens> + relations of `ambient`), generated by
/// kernel_gens. Throws InconsistencyError when some image generator does not
/// lift through kernel_gens modulo the ambient relations.
ModulePresentation subquotient_presentation(const std::vector<ModuleElement>& kernel_gens,
                                            const std::vector<ModuleElement>& image_gens,
                                            const ModulePresentation& ambient, std::string label = {});

/// Removes generators killed by unit entries of the relation matrix.
ModulePresentation prune_presentation(const ModulePresentation& p);

enum class SupportMethod { kFitting, kAnnihilator };

struct SupportDimension {
  /// Krull dimension of the support in affine space; -1 for the zero module.
  int dimension = -1;
  SupportMethod method = SupportMethod::kFitting;
  /// The support ideal is homogeneous, so every component passes through the origin.
  bool conical = false;
};

inline constexpr std::size_t kDefaultMinorLimit = 4000;

/// dim S/Fitt_0(P); when the maximal minors exceed `minor_limit`, the
/// annihilator (same radical) is used instead.
SupportDimension support_dimension(const ModulePresentation& p, std::size_t minor_limit = kDefaultMinorLimit);

/// Krull dimension of S/J from a Gröbner basis of J (-1 when J is the unit ideal).
int krull_dimension(const std::vector<Polynomial>& j, const RingSpec& ring);

/// Annihilator ideal of coker(P) over S.
std::vector<Polynomial> annihilator(const ModulePresentation& p);

/// Ideal generated by the maximal minors of the relation matrix; nullopt when
/// there are more than `minor_limit` of them (or the rank is too large for
/// cofactor expansion).
std::optional<std::vector<Polynomial>> fitting_ideal(const ModulePresentation& p,
                                                     std::size_t minor_limit = kDefaultMinorLimit);

/// Ideal generated by homogeneous polynomials (checked on its reduced Gröbner basis).
bool is_homogeneous_ideal(const std::vector<Polynomial>& j);

}  // namespace klab
