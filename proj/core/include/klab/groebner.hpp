#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "klab/module_element.hpp"
#include "klab/ring.hpp"

namespace klab {

struct GroebnerOptions {
  /// Record, for every basis element, its expression in the input generators.
  bool track = false;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
};

/// Gröbner basis of a submodule of S^rank under position-over-term / grevlex.
///
/// Elements are monic. `elements()` holds the minimal basis (leading terms
/// pairwise non-divisible); with tracking on, `transform(k)` expresses element
/// k as a combination of `origin()` with origin_j weighted by component j.
class GroebnerBasis {
 public:
  GroebnerBasis(PrimeField field, std::size_t nvars, std::size_t rank) : field_(field), nvars_(nvars), rank_(rank) {}

  std::size_t ambient_rank() const noexcept { return rank_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const PrimeField& field() const noexcept { return field_; }
  const std::vector<ModuleElement>& elements() const noexcept { return elements_; }
  const std::vector<ModuleElement>& origin() const noexcept { return origin_; }
  bool tracked() const noexcept { return !transforms_.empty() || elements_.empty(); }
  const ModuleElement& transform(std::size_t k) const { return transforms_.at(k); }
  const GroebnerStats& stats() const noexcept { return stats_; }
  /// The submodule is everything: some position has a unit leading term in every position.
  bool is_whole_module() const;

  /// Remainder modulo the basis; no term of the result is divisible by a leading term.
  ModuleElement normal_form(const ModuleElement& v) const;

  struct Division {
    ModuleElement remainder;
    /// quotients[k] multiplies elements()[k]
    std::vector<Polynomial> quotients;
  };
  Division divide(const ModuleElement& v) const;

  /// Fully interreduced copy of the basis (tails reduced too).
  std::vector<ModuleElement> reduced() const;

  /// Index of a basis element whose leading term divides (position, m).
  std::optional<std::size_t> find_divisor(std::uint32_t position, const Monomial& m) const;

 private:
  friend GroebnerBasis buchberger(const std::vector<ModuleElement>&, const GroebnerOptions&);
  friend struct GroebnerBuilder;

  PrimeField field_;
  std::size_t nvars_;
  std::size_t rank_;
  std::vector<ModuleElement> elements_;
  std::vector<ModuleElement> transforms_;
  std::vector<ModuleElement> origin_;
  void index_leads();

  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<std::size_t>> by_position_;
  GroebnerStats stats_;
};

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree first, ties by insertion order) and the Gebauer–Möller criteria.
/// All generators must share field, variable count and rank; an empty list
/// (or all-zero generators) gives an empty basis. Quotient relations of a ring
/// are not applied here: callers append them as ordinary generators.
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const GroebnerOptions& options = {});

/// Ideal convenience overload (rank 1).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& options = {});

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Coefficients c with v = sum_j c_j * gens_j, or the nonzero remainder.
struct LiftResult {
  std::optional<std::vector<Polynomial>> coefficients;
  ModuleElement remainder;
  bool ok() const noexcept { return coefficients.has_value(); }
};

/// Requires a basis computed from `gens` with tracking on.
LiftResult lift_through(const ModuleElement& v, const std::vector<ModuleElement>& gens, const GroebnerBasis& basis);

/// Columns of a syzygy matrix: elements of S^{gens.size()} generating the full
/// module of relations among the generators.
struct SyzygyMatrix {
  std::size_t source_rank = 0;
  std::vector<ModuleElement> columns;
};

/// Schreyer-style syzygies computed from S-pair reductions of a tracked basis.
SyzygyMatrix syzygies(const std::vector<ModuleElement>& gens, const RingSpec& ring);
/// Same on an already computed (tracked) basis of `gens`.
SyzygyMatrix syzygies_from_basis(const GroebnerBasis& basis);

/// Generators of {v in S^source_rank : A v lies in the span of target_relations},
/// where A is given by its `columns` (each of rank target_rank). With no
/// target relations this is the kernel of A over S; with relations it is the
/// kernel of the induced map into the quotient S^target_rank / relations.
std::vector<ModuleElement> kernel_of_map(const std::vector<ModuleElement>& columns, std::size_t source_rank,
                                         std::size_t target_rank, const std::vector<ModuleElement>& target_relations,
                                         const RingSpec& ring);

/// `required` followed by those candidates (tried by increasing degree) that
/// are not already in the span of `modulo`, `required` and the candidates
/// kept so far.
std::vector<ModuleElement> irredundant_generators(const std::vector<ModuleElement>& required,
                                                  const std::vector<ModuleElement>& candidates,
                                                  const std::vector<ModuleElement>& modulo = {});

/// The ring's quotient relations placed on every basis vector of S^rank.
std::vector<ModuleElement> relation_columns(const RingSpec& ring, std::size_t rank);

/// Matrix-vector product: sum_j vector_j * columns_j.
ModuleElement combine_columns(const std::vector<ModuleElement>& columns, const ModuleElement& coefficients,
                              std::size_t target_rank);

}  // namespace klab
