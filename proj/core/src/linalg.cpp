#include "wbr/linalg.hpp"

#include <algorithm>

namespace wbr {

namespace {

// Fraction-free forward elimination in place.  Returns pivot columns and
// permutes rows so that pivot r sits at row r.  All arithmetic stays in Z.
std::vector<int> echelonize(IntMat& m) {
  std::vector<int> pivot_cols;
  Int prev(1);
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Int p = m(r, col);
    for (int i = r + 1; i < m.rows(); ++i) {
      const Int mi = m(i, col);
      for (int j = col; j < m.cols(); ++j) {
        Int v = p * m(i, j) - mi * m(r, j);
        m(i, j) = v / prev;
      }
    }
    prev = p;
    pivot_cols.push_back(col);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

int rank_bareiss(IntMat m) {
  return static_cast<int>(echelonize(m).size());
}

Int det_bareiss(IntMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (int k = 0; k < m.rows(); ++k) {
    int piv = -1;
    for (int i = k; i < m.rows(); ++i)
      if (m(i, k) != 0) { piv = i; break; }
    if (piv < 0) return Int(0);
    if (piv != k) {
      sign = -sign;
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(k, j));
    }
    const Int p = m(k, k);
    for (int i = k + 1; i < m.rows(); ++i) {
      const Int mi = m(i, k);
      for (int j = k; j < m.cols(); ++j) m(i, j) = (p * m(i, j) - mi * m(k, j)) / prev;
    }
    prev = p;
  }
  return sign > 0 ? m(m.rows() - 1, m.rows() - 1) : -m(m.rows() - 1, m.rows() - 1);
}

namespace {

// Right kernel { x : m x = 0 } over Q from an integer matrix.
std::vector<std::vector<Rat>> right_kernel(IntMat m) {
  const int n = m.cols();
  std::vector<int> pivot_cols = echelonize(m);
  const int r = static_cast<int>(pivot_cols.size());
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(n, Rat(0));
    x[f] = 1;
    for (int i = r - 1; i >= 0; --i) {
      const int pc = pivot_cols[i];
      Rat acc(0);
      for (int j = pc + 1; j < n; ++j)
        if (x[j] != 0) acc += Rat(m(i, j)) * x[j];
      x[pc] = -acc / Rat(m(i, pc));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

}  // namespace

std::vector<std::vector<Rat>> left_kernel(const IntMat& m) {
  return right_kernel(transpose(m));
}

std::vector<Int> smith_normal_form(IntMat m) {
  const int n = std::min(m.rows(), m.cols());
  std::vector<Int> diag(n, Int(0));
  int t = 0;
  while (t < n) {
    // locate a nonzero entry of minimal absolute value in the working block
    int bi = -1, bj = -1;
    Int best(0);
    for (int i = t; i < m.rows(); ++i)
      for (int j = t; j < m.cols(); ++j) {
        if (m(i, j) == 0) continue;
        Int a = abs(m(i, j));
        if (bi < 0 || a < best) { best = a; bi = i; bj = j; }
      }
    if (bi < 0) break;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(bi, j), m(t, j));
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, bj), m(i, t));

    bool clean = true;
    for (int i = t + 1; i < m.rows(); ++i) {
      if (m(i, t) == 0) continue;
      Int q = m(i, t) / m(t, t);
      for (int j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
      if (m(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m.cols(); ++j) {
      if (m(t, j) == 0) continue;
      Int q = m(t, j) / m(t, t);
      for (int i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;

    // enforce divisibility of the remaining block by the pivot
    bool divides_all = true;
    for (int i = t + 1; i < m.rows() && divides_all; ++i)
      for (int j = t + 1; j < m.cols(); ++j)
        if (m(i, j) % m(t, t) != 0) {
          for (int jj = t; jj < m.cols(); ++jj) m(t, jj) += m(i, jj);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;

    diag[t] = abs(m(t, t));
    ++t;
  }
  return diag;
}

std::optional<std::vector<Rat>> solve_left(const IntMat& m, const std::vector<Rat>& rhs) {
  // x * m = rhs  <=>  m^T x^T = rhs^T; plain rational elimination.
  const int n = m.rows(), k = m.cols();
  if (static_cast<int>(rhs.size()) != k) throw std::invalid_argument("solve_left: rhs length");
  RatMat a(k, n + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Rat(m(j, i));
    a(i, n) = rhs[i];
  }
  std::vector<int> pivot_cols;
  int r = 0;
  for (int col = 0; col < n && r < k; ++col) {
    int piv = -1;
    for (int i = r; i < k; ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j <= n; ++j) std::swap(a(piv, j), a(r, j));
    for (int i = 0; i < k; ++i) {
      if (i == r || a(i, col) == 0) continue;
      Rat f = a(i, col) / a(r, col);
      for (int j = col; j <= n; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (int i = r; i < k; ++i)
    if (a(i, n) != 0) return std::nullopt;
  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_cols[i]] = a(i, n) / a(i, pivot_cols[i]);
  return x;
}

IntMat inverse_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Int d = det_bareiss(m);
  if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular, det = " + d.str());
  const int n = m.rows();
  IntMat inv(n, n);
  for (int e = 0; e < n; ++e) {
    std::vector<Rat> rhs(n, Rat(0));
    rhs[e] = 1;
    auto x = solve_left(m, rhs);  // x * m = e_row  -> rows of m^{-1}
    for (int j = 0; j < n; ++j) {
      const Rat& v = (*x)[j];
      if (denominator(v) != 1) throw std::logic_error("unimodular inverse not integral");
      inv(e, j) = numerator(v);
    }
  }
  return inv;
}

PolyEliminator::PolyEliminator(int n_rows, std::vector<std::vector<Poly>> columns)
    : n_rows_(n_rows), n_cols_(static_cast<int>(columns.size())) {
  // row-major working copy
  std::vector<std::vector<Poly>> m(n_rows_, std::vector<Poly>(n_cols_));
  for (int j = 0; j < n_cols_; ++j) {
    if (static_cast<int>(columns[j].size()) != n_rows_)
      throw std::invalid_argument("PolyEliminator: column length mismatch");
    for (int i = 0; i < n_rows_; ++i) m[i][j] = columns[j][i];
  }
  Poly prev(1);
  int level = 0;
  for (int col = 0; col < n_cols_ && level < n_rows_; ++col) {
    int piv = -1;
    for (int i = level; i < n_rows_; ++i)
      if (!m[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != level) std::swap(m[piv], m[level]);
    Step st;
    st.pivot_row = piv;
    st.level = level;
    st.pivot = m[level][col];
    st.prev = prev;
    st.mults.resize(n_rows_ - level - 1);
    for (int i = level + 1; i < n_rows_; ++i) {
      st.mults[i - level - 1] = m[i][col];
      for (int j = col; j < n_cols_; ++j)
        m[i][j] = (st.pivot * m[i][j] - st.mults[i - level - 1] * m[level][j]).divexact(prev);
    }
    prev = st.pivot;
    steps_.push_back(std::move(st));
    pivot_cols_.push_back(col);
    ++level;
  }
  reduced_.assign(m.begin(), m.begin() + level);
}

std::optional<std::vector<RatFunc>> PolyEliminator::solve(const std::vector<RatFunc>& rhs) const {
  if (static_cast<int>(rhs.size()) != n_rows_)
    throw std::invalid_argument("PolyEliminator::solve: rhs length mismatch");
  if (rank() < n_cols_) throw std::domain_error("singular basis: columns are dependent");

  // clear denominators so the Bareiss replay stays in Z[x]
  Poly scale(1);
  for (const auto& v : rhs)
    if (!v.den().is_one()) scale = scale.divexact(gcd(scale, v.den())) * v.den();
  std::vector<Poly> b(n_rows_);
  for (int i = 0; i < n_rows_; ++i) b[i] = rhs[i].num() * scale.divexact(rhs[i].den());

  for (const auto& st : steps_) {
    if (st.pivot_row != st.level) std::swap(b[st.pivot_row], b[st.level]);
    for (int i = st.level + 1; i < n_rows_; ++i)
      b[i] = (st.pivot * b[i] - st.mults[i - st.level - 1] * b[st.level]).divexact(st.prev);
  }
  for (int i = rank(); i < n_rows_; ++i)
    if (!b[i].is_zero()) return std::nullopt;

  std::vector<RatFunc> c(n_cols_);
  for (int r = n_cols_ - 1; r >= 0; --r) {
    RatFunc acc(b[r]);
    for (int j = r + 1; j < n_cols_; ++j) acc -= RatFunc(reduced_[r][j]) * c[j];
    c[r] = acc / RatFunc(reduced_[r][r]);
  }
  RatFunc s(scale);
  for (auto& v : c) v /= s;
  return c;
}

}  // namespace wbr
