#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "klab/field.hpp"

namespace klab {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::uint32_t, Coeff>>;

struct RrefResult {
  std::size_t rank = 0;
  /// Nonzero rows of the reduced row echelon form, ordered by pivot.
  std::vector<std::vector<Coeff>> basis;
  std::vector<std::size_t> pivots;
};

/// Row reduction of a dense matrix over the field. All rows must share one
/// length; entries are taken modulo the field's prime.
RrefResult rref_rank(std::vector<std::vector<std::int64_t>> rows, const PrimeField& field);

/// Incrementally built row-echelon basis of a subspace of field^width.
///
/// Rows are normalized so their first entry (the pivot) is 1; rows are not
/// back-reduced against later pivots.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& field, std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<SparseVector>& rows() const noexcept { return rows_; }

  /// Adds `v` to the span; returns false when it was already contained.
  bool insert(const SparseVector& v);
  /// Reduces `v` modulo the span (result has no entry at any pivot).
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

 private:
  SparseVector reduce_dense(std::vector<Coeff>& acc, std::uint32_t lo, std::uint32_t hi) const;

  PrimeField field_;
  std::size_t width_;
  std::vector<SparseVector> rows_;
  std::vector<std::int64_t> pivot_row_;  // -1 when column has no pivot
  mutable std::vector<Coeff> scratch_;
};

/// Sparse matrix acting column-wise: columns[j] is the image of basis vector j.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<SparseVector> columns;
};

SparseVector apply(const SparseMatrix& a, const SparseVector& v, const PrimeField& field);

}  // namespace klab
