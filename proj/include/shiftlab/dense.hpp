#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "shiftlab/error.hpp"
#include "shiftlab/field.hpp"

namespace shiftlab {

template <class Field>
using DenseMatrix = Eigen::Matrix<typename Field::Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Field>
using DenseVector = Eigen::Matrix<typename Field::Element, Eigen::Dynamic, 1>;

template <class Field>
DenseMatrix<Field> zero_matrix(const Field& field, Eigen::Index rows, Eigen::Index cols) {
  return DenseMatrix<Field>::Constant(rows, cols, field.zero());
}

template <class Field>
DenseMatrix<Field> identity_matrix(const Field& field, Eigen::Index n) {
  DenseMatrix<Field> m = zero_matrix(field, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

namespace detail {

/// dst[from..to) -= factor * src[from..to)
template <class Field>
void axpy_sub(const Field& field, typename Field::Element* dst, const typename Field::Element* src,
              const typename Field::Element& factor, Eigen::Index from, Eigen::Index to) {
  for (Eigen::Index c = from; c < to; ++c) {
    if (!field.is_zero(src[c])) dst[c] = field.sub(dst[c], field.mul(factor, src[c]));
  }
}

template <class Field>
void scale(const Field& field, typename Field::Element* row, const typename Field::Element& factor,
           Eigen::Index from, Eigen::Index to) {
  for (Eigen::Index c = from; c < to; ++c) row[c] = field.mul(factor, row[c]);
}

}  // namespace detail

template <class Field>
struct EchelonResult {
  /// Pivot columns (original indices) in the order they were found.
  std::vector<int> pivot_columns;
  int rank = 0;
  /// Row echelon form with the original column layout; the first `rank` rows
  /// carry the pivots and are normalized to a leading 1.
  DenseMatrix<Field> reduced;
};

/// Gaussian elimination scanning columns in `column_order`. The pivot columns
/// are exactly the leading columns of the row space with respect to that
/// order, independent of the row order of `m`.
template <class Field>
EchelonResult<Field> echelonize(const Field& field, const DenseMatrix<Field>& m,
                                std::span<const int> column_order, bool full_reduce = false) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = static_cast<Eigen::Index>(column_order.size());
  if (cols != m.cols()) throw Error(ErrorKind::InvalidParameters, "column order must permute all columns");

  DenseMatrix<Field> work(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) work.col(c) = m.col(column_order[c]);

  EchelonResult<Field> out;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (!field.is_zero(work(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) work.row(pivot).swap(work.row(rank));
    auto* prow = work.row(rank).data();
    detail::scale(field, prow, field.inv(prow[c]), c, cols);
    const Eigen::Index first = full_reduce ? 0 : rank + 1;
    for (Eigen::Index r = first; r < rows; ++r) {
      if (r == rank) continue;
      auto* row = work.row(r).data();
      if (field.is_zero(row[c])) continue;
      const typename Field::Element factor = row[c];
      detail::axpy_sub(field, row, prow, factor, c, cols);
    }
    out.pivot_columns.push_back(column_order[c]);
    ++rank;
  }
  out.rank = static_cast<int>(rank);
  out.reduced.resize(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) out.reduced.col(column_order[c]) = work.col(c);
  return out;
}

template <class Field>
EchelonResult<Field> echelonize(const Field& field, const DenseMatrix<Field>& m) {
  std::vector<int> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return echelonize(field, m, order);
}

template <class Field>
int rank(const Field& field, const DenseMatrix<Field>& m) {
  return echelonize(field, m).rank;
}

/// Gauss–Jordan inverse. Throws SingularMatrix.
template <class Field>
DenseMatrix<Field> invert(const Field& field, const DenseMatrix<Field>& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::InvalidParameters, "only square matrices are invertible");
  DenseMatrix<Field> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity_matrix(field, n);
  std::vector<int> order(2 * n);
  std::iota(order.begin(), order.end(), 0);
  EchelonResult<Field> e = echelonize(field, aug, order, true);
  if (e.rank < n || e.pivot_columns[n - 1] >= n) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  return e.reduced.topRightCorner(n, n);
}

/// Uniform entries, resampled until the matrix is invertible. Deterministic
/// per seed.
template <class Field>
DenseMatrix<Field> random_invertible(const Field& field, int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "matrix size must be positive");
  std::mt19937_64 rng(seed);
  while (true) {
    DenseMatrix<Field> m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = field.random(rng);
    if (rank(field, m) == n) return m;
  }
}

/// Vectors inserted one at a time; keeps an echelon basis of their span.
/// Each stored row is reduced against all earlier rows, so reducing a vector
/// against stored rows in insertion order clears every pivot position.
template <class Field>
class IncrementalBasis {
 public:
  using Element = typename Field::Element;

  IncrementalBasis(const Field& field, Eigen::Index dim) : field_(&field), dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  /// Reduces v in place; afterwards v vanishes on every pivot column.
  void reduce(std::span<Element> v) const {
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const Eigen::Index p = pivots_[k];
      if (field_->is_zero(v[p])) continue;
      const Element factor = v[p];
      detail::axpy_sub(*field_, v.data(), rows_[k].data(), factor, 0, dim_);
    }
  }

  /// True when v (after reduction) was independent and has been added.
  bool insert(std::vector<Element> v) {
    reduce(v);
    Eigen::Index p = 0;
    while (p < dim_ && field_->is_zero(v[p])) ++p;
    if (p == dim_) return false;
    detail::scale(*field_, v.data(), field_->inv(v[p]), 0, dim_);
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  const Field* field_;
  Eigen::Index dim_;
  std::vector<Eigen::Index> pivots_;
  std::vector<std::vector<Element>> rows_;
};

}  // namespace shiftlab
