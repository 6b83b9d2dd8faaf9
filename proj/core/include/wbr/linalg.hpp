#pragma once

#include "wbr/arith.hpp"

#include <optional>
#include <vector>

namespace wbr {

/// Dense matrix over a value type; row-major.
template <typename T>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, T fill = T()) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  static Mat identity(int n) {
    Mat m(n, n, T(0));
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_, T(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& v = a(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
      }
    return c;
  }

private:
  int rows_, cols_;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

int rank_bareiss(IntMat m);
Int det_bareiss(IntMat m);

/// Basis of { v : v * m = 0 } over the rationals (row vectors).
std::vector<std::vector<Rat>> left_kernel(const IntMat& m);

/// Invariant factors d_1 | d_2 | ... (nonnegative), zero-padded to min(rows, cols).
std::vector<Int> smith_normal_form(IntMat m);

/// Solves x * m = rhs for a single row vector; nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_left(const IntMat& m, const std::vector<Rat>& rhs);

/// Inverse of a matrix with determinant +-1; throws if not unimodular.
IntMat inverse_unimodular(const IntMat& m);

/// Fraction-free LU-style factorization of a tall column matrix over Z[x],
/// reusable across many right-hand sides.  Solves A c = b with A the
/// N x B matrix whose columns are basis vectors, exactly over Q(x).
class PolyEliminator {
public:
  /// columns[j] is the j-th basis vector of length n_rows.
  PolyEliminator(int n_rows, std::vector<std::vector<Poly>> columns);

  int rank() const { return static_cast<int>(pivot_cols_.size()); }
  int n_rows() const { return n_rows_; }
  int n_cols() const { return n_cols_; }

  /// Coordinates of rhs in the column basis; nullopt if rhs is outside the span.
  /// Requires full column rank.
  std::optional<std::vector<RatFunc>> solve(const std::vector<RatFunc>& rhs) const;

private:
  struct Step {
    int pivot_row;            // row swapped into position `level`
    int level;                // elimination depth
    std::vector<Poly> mults;  // multiplier per row below level (column entries)
    Poly pivot;
    Poly prev;
  };
  int n_rows_, n_cols_;
  std::vector<int> pivot_cols_;
  std::vector<Step> steps_;
  std::vector<std::vector<Poly>> reduced_;  // echelon form, row-major rows
};

}  // namespace wbr
