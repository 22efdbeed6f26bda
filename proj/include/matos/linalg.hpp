#pragma once

#include <optional>
#include <vector>

#include "matos/rational.hpp"

namespace matos {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Rat> row(int r) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
            a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

/// Exact rank over Q via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
int rational_rank(const RatMatrix& m);

/// Reduced row echelon form; canonical for the row space. The parallel
/// variant eliminates rows concurrently and returns the identical matrix.
RatMatrix rref_serial(const RatMatrix& m);
RatMatrix rref_parallel(const RatMatrix& m);
RatMatrix rref(const RatMatrix& m);

/// Pivot columns of a matrix already in RREF.
std::vector<int> rref_pivots(const RatMatrix& r);

/// RREF basis of the right kernel {x : m x = 0}.
RatMatrix kernel_basis(const RatMatrix& m);

/// Incremental row-space builder: rows are reduced against the current
/// echelon as they arrive, so a spanning set never has to be materialized.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool full() const { return rank() == cols_; }

  /// Reduces `row` in place against the echelon; if nonzero remains it is
  /// normalized and absorbed. Returns true when the rank grew.
  bool insert(std::vector<Rat> row);

  /// Reduces a vector to its normal form modulo the row space.
  void reduce(std::vector<Rat>& row) const;

  /// Finishes Gauss-Jordan and returns the canonical RREF, rows ordered by
  /// pivot column.
  RatMatrix to_rref() const;

 private:
  int cols_;
  std::vector<std::vector<Rat>> rows_;  // each row normalized: leading coeff 1
  std::vector<int> pivot_col_;          // pivot column of rows_[i]
  std::vector<int> pivot_row_;          // column -> row index or -1
};

/// Generic exact Gaussian rank over any field-like scalar (needs +,-,*,/,
/// is_zero). Used for quadratic-extension matrices.
template <class F>
int field_rank(std::vector<std::vector<F>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(piv)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(c)].is_zero()) continue;
      F factor = row[static_cast<std::size_t>(c)] / prow[static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) {
        row[static_cast<std::size_t>(j)] =
            row[static_cast<std::size_t>(j)] - factor * prow[static_cast<std::size_t>(j)];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace matos
