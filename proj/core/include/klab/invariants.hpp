#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "klab/colength.hpp"
#include "klab/families.hpp"
#include "klab/fpmodules.hpp"
#include "klab/koszul.hpp"

namespace klab {

/// Krull dimension of coker(P) at the origin: the affine support dimension
/// when the support is conical, otherwise the growth degree of N -> ℓ(P/m^N P).
int local_dimension(const ModulePresentation& p);

enum class MultiplicityStatus { kStabilized, kUnstable };
std::string to_string(MultiplicityStatus s);

struct MultiplicityEstimate {
  std::uint64_t value = 0;
  int dimension = 0;
  /// ℓ(P/I^k P) for k = 1..window.
  std::vector<std::uint64_t> lengths;
  /// d-th finite differences of `lengths`.
  std::vector<std::int64_t> differences_window;
  MultiplicityStatus status = MultiplicityStatus::kUnstable;
  bool stabilized() const noexcept { return status == MultiplicityStatus::kStabilized; }
};

struct MultiplicityOptions {
  /// Number of powers sampled; 0 picks dimension + 4.
  unsigned window = 0;
  unsigned cap = kDefaultLengthCap;
  /// Known dimension of P; computed with local_dimension when absent.
  std::optional<int> dimension;
};

/// e_I(P) from the d-th differences of k -> ℓ(P/I^k P); stabilized once the
/// last three differences agree. Throws PreconditionError unless ℓ(P/IP) is
/// certified finite.
MultiplicityEstimate hs_multiplicity(const std::vector<Polynomial>& ideal, const ModulePresentation& p,
                                     const MultiplicityOptions& options = {});

/// Generators of I^k (products of k generators, repetition allowed).
std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& ideal, unsigned k);

struct SerreReport {
  MultiplicityEstimate multiplicity;
  /// Cohomological lengths ℓ(H^i(f; P)) for i = 0..d.
  std::vector<std::uint64_t> lengths;
  /// Σ_i (-1)^i ℓ(H_i) in homological indexing, i.e. starting from ℓ(P/fP).
  std::int64_t alternating_sum = 0;
  bool conclusive = false;
  bool pass = false;
};

/// Throws PreconditionError unless f has dim(P) entries and ℓ(P/fP) is finite.
SerreReport serre_check(const std::vector<Polynomial>& f, const ModulePresentation& p,
                        const MultiplicityOptions& options = {});

struct LechReport {
  std::uint64_t e_ideal = 0;
  std::uint64_t e_maximal = 0;
  std::uint64_t colength = 0;
  int dimension = 0;
  /// lhs = e_I(R), rhs = d! e_m(R) ℓ(R/I).
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool conclusive = false;
  bool pass = false;
};

LechReport lech_check(const std::vector<Polynomial>& ideal, const RingSpec& ring,
                      const MultiplicityOptions& options = {});

enum class Finiteness { kYes, kNo, kSemi };
std::string to_string(Finiteness f);

struct FinitenessEntry {
  std::size_t index = 0;
  /// The Ext index D - i examined for H^i_m.
  std::size_t ext_index = 0;
  Finiteness finite = Finiteness::kSemi;
  std::optional<LengthCertificate> length;
  std::optional<SupportDimension> support;
  std::optional<GrowthEstimate> growth;
};

struct FinitenessProfile {
  int dimension = 0;
  std::vector<FinitenessEntry> entries;
  /// Largest k with every entry i < k finite (capped at the dimension).
  int certified_asydepth = 0;
  /// The entry that ends the run is only semi-certified.
  bool semi = false;
};

/// Finiteness of ℓ(H^i_m(P)) for i = 0..dim P through Ext^{D-i}_S(P, S).
FinitenessProfile lc_finiteness_profile(const ModulePresentation& p, unsigned cap = kDefaultLengthCap);

struct AsydepthResult {
  int value = 0;
  bool semi = false;
  FinitenessProfile profile;
};

/// Throws PreconditionError unless dim P equals the dimension of its ring.
AsydepthResult certified_asydepth(const ModulePresentation& p, unsigned cap = kDefaultLengthCap);

struct BackwardBoundReport {
  bool applicable = false;
  std::uint64_t measured = 0;
  std::uint64_t bound = 0;
  bool pass = false;
};

/// ℓ(H^i(f; P)) against Σ_{j<=i} C(d, i-j) ℓ(Ext^{D-j}(P, S)).
BackwardBoundReport backward_bound_check(const ModulePresentation& p, const std::vector<Polynomial>& f,
                                         std::size_t i, unsigned cap = kDefaultLengthCap);

struct SeriesRow {
  unsigned n = 0;
  std::optional<std::uint64_t> t;
  std::uint64_t len_hi = 0;
  std::uint64_t len_r_mod_i = 0;
  std::uint64_t len_m_mod_im = 0;
  /// Certificate degree of the H^i length.
  unsigned cert_n = 0;
  bool complete = true;
  std::string error;
};

/// One row per n: ℓ(H^i(I_n; target)), ℓ(R/I_n), ℓ(target/I_n target).
std::vector<SeriesRow> effaceability_series(const std::function<FamilyInstance(unsigned)>& family,
                                            const std::string& target, std::size_t i, unsigned n_first,
                                            unsigned n_last, unsigned cap = kFamilyLengthCap);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace klab
