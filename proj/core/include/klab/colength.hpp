#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klab/groebner.hpp"
#include "klab/linalg.hpp"
#include "klab/module_presentation.hpp"

namespace klab {

inline constexpr unsigned kDefaultLengthCap = 256;

enum class LengthStatus { kCertified, kCapExceeded };

enum class LengthMethod {
  kAuto,
  /// Gröbner basis of the relations, then the m-adic filtration on the finite
  /// quotient through multiplication matrices.
  kFiltration,
  /// Gröbner bases of relations + m^N for increasing N.
  kTruncatedBasis,
  /// Row reduction on truncated monomial multiples of the relations.
  kLinearAlgebra,
};

std::string to_string(LengthStatus s);
std::string to_string(LengthMethod m);

/// Local length at the origin with its stabilization evidence.
///
/// Writing h(N) = dim S^r / (U + m^N S^r), h is non-decreasing and
/// h(N) = h(N+1) forces m^N F ⊆ U + m^{N+1} F, so m^N F ⊆ U locally by
/// Nakayama and h is constant from N on: the local length is h(N).
struct LengthCertificate {
  std::uint64_t value = 0;
  /// Smallest N >= 1 with h(N) = h(N+1) (or the cap when not stabilized).
  unsigned truncation_degree = 1;
  std::pair<std::uint64_t, std::uint64_t> witness{0, 0};
  LengthStatus status = LengthStatus::kCertified;
  LengthMethod method = LengthMethod::kAuto;
  /// Sampled (N, h(N)) pairs in increasing N.
  std::vector<std::pair<unsigned, std::uint64_t>> samples;

  bool certified() const noexcept { return status == LengthStatus::kCertified; }
};

/// Internal consistency of a certificate: witness equality, value, monotone samples.
bool certificate_consistent(const LengthCertificate& c);

struct LengthOptions {
  unsigned cap = kDefaultLengthCap;
  LengthMethod method = LengthMethod::kAuto;
};

/// dim S/(I + quotient relations + m^N) by row reduction on monomials of degree < N.
std::uint64_t dim_quotient_at(const std::vector<Polynomial>& ideal, const RingSpec& ring, unsigned n);
/// dim coker(P) / m^N coker(P) by the same truncated row reduction.
std::uint64_t dim_quotient_at(const ModulePresentation& p, unsigned n);
/// Same quantity through a Gröbner basis of relations + m^N generators.
std::uint64_t dim_quotient_truncated_basis(const ModulePresentation& p, unsigned n);

/// ℓ(R/I) at the origin, R = S/(quotient relations).
LengthCertificate local_colength(const std::vector<Polynomial>& ideal, const RingSpec& ring,
                                 unsigned cap = kDefaultLengthCap);
LengthCertificate local_colength(const std::vector<Polynomial>& ideal, const RingSpec& ring,
                                 const LengthOptions& options);
LengthCertificate module_local_colength(const ModulePresentation& p, unsigned cap = kDefaultLengthCap);
LengthCertificate module_local_colength(const ModulePresentation& p, const LengthOptions& options);

/// Finite-dimensional quotient S^r/U on its standard monomials together with
/// the action of every variable.
struct FiniteQuotient {
  std::size_t rank = 0;
  std::vector<std::pair<std::uint32_t, Monomial>> basis;
  /// multiplication[v] is the matrix of x_v in the standard-monomial basis.
  std::vector<SparseMatrix> multiplication;
  std::size_t dimension() const noexcept { return basis.size(); }
};

/// nullopt when S^r/U is infinite-dimensional or larger than `max_dimension`.
std::optional<FiniteQuotient> finite_quotient(const GroebnerBasis& basis, std::size_t max_dimension = 1'000'000);

/// Number of standard monomials of a basis whose quotient is finite.
std::optional<std::uint64_t> count_standard_monomials(const GroebnerBasis& basis,
                                                      std::uint64_t limit = 50'000'000);

enum class GrowthStatus { kStable, kInconclusive };

/// Eventual polynomial degree of N -> h(N): the Krull dimension at the origin.
struct GrowthEstimate {
  int degree = -1;
  /// Leading finite difference (h itself when degree is 0).
  std::uint64_t leading_difference = 0;
  GrowthStatus status = GrowthStatus::kInconclusive;
  std::vector<std::uint64_t> dims;
  unsigned first_degree = 1;
};

GrowthEstimate growth_degree(const ModulePresentation& p, unsigned window, unsigned start = 1);

}  // namespace klab
