#include "matos/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matos {

int rational_rank(const RatMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<Int>> a(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    Int lcm = 1;
    for (int c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    auto& row = a[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
      const Rat& q = m.at(r, c);
      row[static_cast<std::size_t>(c)] = q.get_num() * (lcm / q.get_den());
    }
  }

  // Bareiss: a[i][j] <- (a[i][j]*pivot - a[i][k]*a[k][j]) / prev_pivot,
  // all divisions exact.
  Int prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(piv)]);
    const Int& pivot = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const Int head = row[static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) {
        Int v = row[static_cast<std::size_t>(j)] * pivot -
                head * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

namespace {

RatMatrix rref_impl(const RatMatrix& m, bool parallel) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) a[static_cast<std::size_t>(r)] = m.row(r);

  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(piv)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    if (prow[static_cast<std::size_t>(c)] != 1) {
      Rat inv = Rat(1) / prow[static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) prow[static_cast<std::size_t>(j)] *= inv;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && rows > 32)
#endif
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto& row = a[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(c)] == 0) continue;
      Rat factor = row[static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  (void)parallel;

  RatMatrix out(rank, cols);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < cols; ++c) out.at(r, c) = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return out;
}

}  // namespace

RatMatrix rref_serial(const RatMatrix& m) { return rref_impl(m, false); }
RatMatrix rref_parallel(const RatMatrix& m) { return rref_impl(m, true); }

RatMatrix rref(const RatMatrix& m) {
#ifdef _OPENMP
  return rref_impl(m, m.rows() > 64);
#else
  return rref_impl(m, false);
#endif
}

std::vector<int> rref_pivots(const RatMatrix& r) {
  std::vector<int> pivots;
  for (int i = 0; i < r.rows(); ++i) {
    for (int c = 0; c < r.cols(); ++c) {
      if (r.at(i, c) != 0) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  RatMatrix r = rref(m);
  std::vector<int> pivots = rref_pivots(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  RatMatrix out(static_cast<int>(free_cols.size()), m.cols());
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[static_cast<std::size_t>(k)];
    out.at(k, fc) = 1;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      out.at(k, pivots[static_cast<std::size_t>(i)]) = -r.at(i, fc);
  }
  return out;
}

bool Echelon::insert(std::vector<Rat> row) {
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("echelon row width");
  reduce(row);
  int lead = -1;
  for (int c = 0; c < cols_; ++c) {
    if (row[static_cast<std::size_t>(c)] != 0) {
      lead = c;
      break;
    }
  }
  if (lead < 0) return false;
  Rat inv = Rat(1) / row[static_cast<std::size_t>(lead)];
  for (int c = lead; c < cols_; ++c) row[static_cast<std::size_t>(c)] *= inv;
  pivot_row_[static_cast<std::size_t>(lead)] = static_cast<int>(rows_.size());
  pivot_col_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

void Echelon::reduce(std::vector<Rat>& row) const {
  for (int c = 0; c < cols_; ++c) {
    if (row[static_cast<std::size_t>(c)] == 0) continue;
    int pr = pivot_row_[static_cast<std::size_t>(c)];
    if (pr < 0) continue;
    Rat factor = row[static_cast<std::size_t>(c)];
    const auto& prow = rows_[static_cast<std::size_t>(pr)];
    for (int j = c; j < cols_; ++j) {
      if (prow[static_cast<std::size_t>(j)] != 0) row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
    }
  }
}

RatMatrix Echelon::to_rref() const {
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return pivot_col_[static_cast<std::size_t>(x)] < pivot_col_[static_cast<std::size_t>(y)];
  });

  std::vector<std::vector<Rat>> rows;
  rows.reserve(rows_.size());
  for (int i : order) rows.push_back(rows_[static_cast<std::size_t>(i)]);

  // Back-eliminate above each pivot, bottom-up.
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
    int pc = pivot_col_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    for (int k = 0; k < i; ++k) {
      auto& row = rows[static_cast<std::size_t>(k)];
      if (row[static_cast<std::size_t>(pc)] == 0) continue;
      Rat factor = row[static_cast<std::size_t>(pc)];
      const auto& prow = rows[static_cast<std::size_t>(i)];
      for (int j = pc; j < cols_; ++j) {
        if (prow[static_cast<std::size_t>(j)] != 0) row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
      }
    }
  }

  RatMatrix out(static_cast<int>(rows.size()), cols_);
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return out;
}

}  // namespace matos
