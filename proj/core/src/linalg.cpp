#include "klab/linalg.hpp"

#include <algorithm>

#include "klab/error.hpp"

namespace klab {

RrefResult rref_rank(std::vector<std::vector<std::int64_t>> rows, const PrimeField& field) {
  RrefResult out;
  if (rows.empty()) return out;
  const std::size_t width = rows.front().size();
  std::vector<std::vector<Coeff>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != width) throw StructuralError("rref_rank rows differ in length");
    std::vector<Coeff> row(width);
    for (std::size_t c = 0; c < width; ++c) row[c] = field.reduce(r[c]);
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Coeff inv = field.inv(m[rank][col]);
    for (auto& x : m[rank]) x = field.mul(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Coeff f = field.neg(m[r][col]);
      for (std::size_t c = col; c < width; ++c) {
        if (m[rank][c]) m[r][c] = field.add(m[r][c], field.mul(f, m[rank][c]));
      }
    }
    out.pivots.push_back(col);
    ++rank;
  }
  m.resize(rank);
  out.rank = rank;
  out.basis = std::move(m);
  return out;
}

EchelonBasis::EchelonBasis(const PrimeField& field, std::size_t width)
    : field_(field), width_(width), pivot_row_(width, -1), scratch_(width, 0) {}

SparseVector EchelonBasis::reduce_dense(std::vector<Coeff>& acc, std::uint32_t lo, std::uint32_t hi) const {
  SparseVector out;
  for (std::uint32_t i = lo; i < hi; ++i) {
    Coeff c = acc[i];
    if (c == 0) continue;
    acc[i] = 0;
    std::int64_t r = pivot_row_[i];
    if (r < 0) {
      out.push_back({i, c});
      continue;
    }
    Coeff f = field_.neg(c);
    const auto& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = 1; k < row.size(); ++k) {
      auto [idx, val] = row[k];
      acc[idx] = field_.add(acc[idx], field_.mul(f, val));
      if (idx >= hi) hi = idx + 1;
    }
  }
  return out;
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
  if (v.empty()) return {};
  std::uint32_t lo = v.front().first, hi = 0;
  for (auto [i, c] : v) {
    if (i >= width_) throw StructuralError("sparse vector index exceeds width");
    scratch_[i] = field_.add(scratch_[i], c);
    lo = std::min(lo, i);
    hi = std::max(hi, i + 1);
  }
  return reduce_dense(scratch_, lo, hi);
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  Coeff inv = field_.inv(r.front().second);
  for (auto& e : r) e.second = field_.mul(e.second, inv);
  pivot_row_[r.front().first] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

SparseVector apply(const SparseMatrix& a, const SparseVector& v, const PrimeField& field) {
  std::vector<std::pair<std::uint32_t, Coeff>> acc;
  for (auto [j, c] : v) {
    for (auto [i, x] : a.columns.at(j)) acc.push_back({i, field.mul(c, x)});
  }
  std::sort(acc.begin(), acc.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  SparseVector out;
  for (const auto& [i, x] : acc) {
    if (!out.empty() && out.back().first == i) {
      out.back().second = field.add(out.back().second, x);
    } else {
      out.push_back({i, x});
    }
  }
  std::erase_if(out, [](const auto& p) { return p.second == 0; });
  return out;
}

}  // namespace klab
