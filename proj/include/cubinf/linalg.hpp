#pragma once

#include <optional>
#include <vector>

#include "cubinf/rational.hpp"

namespace cubinf {

/// Small dense exact matrices. Gaussian elimination with the first nonzero
/// pivot in column order, so kernels and echelon forms are deterministic.
template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<std::vector<K>> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(r, std::vector<K>(c, K())) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = K(1);
    return m;
  }

  Mat operator*(const Mat& o) const {
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        if (a[i][k].is_zero()) continue;
        for (int j = 0; j < o.cols; ++j) r.a[i][j] = r.a[i][j] + a[i][k] * o.a[k][j];
      }
    return r;
  }
  std::vector<K> apply(const std::vector<K>& v) const {
    std::vector<K> r(rows, K());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r[i] = r[i] + a[i][j] * v[j];
    return r;
  }

  /// Row echelon in place; returns rank. Records pivot columns if asked.
  int echelonize(std::vector<int>* pivot_cols = nullptr) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (!a[i][c].is_zero()) { p = i; break; }
      if (p < 0) continue;
      std::swap(a[p], a[r]);
      K inv = a[r][c].inv();
      for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
      for (int i = 0; i < rows; ++i) {
        if (i == r || a[i][c].is_zero()) continue;
        K f = a[i][c];
        for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
      }
      if (pivot_cols) pivot_cols->push_back(c);
      ++r;
    }
    return r;
  }

  int rank() const {
    Mat m = *this;
    return m.echelonize();
  }

  K det() const {
    Mat m = *this;
    K d(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (!m.a[i][c].is_zero()) { p = i; break; }
      if (p < 0) return K();
      if (p != r) { std::swap(m.a[p], m.a[r]); d = -d; }
      d = d * m.a[r][c];
      K inv = m.a[r][c].inv();
      for (int i = r + 1; i < rows; ++i) {
        if (m.a[i][c].is_zero()) continue;
        K f = m.a[i][c] * inv;
        for (int j = c; j < cols; ++j) m.a[i][j] = m.a[i][j] - f * m.a[r][j];
      }
      ++r;
    }
    return d;
  }

  std::optional<Mat> inverse() const {
    Mat aug(rows, 2 * cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) aug.a[i][j] = a[i][j];
      aug.a[i][cols + i] = K(1);
    }
    if (aug.echelonize() < rows) return std::nullopt;
    Mat inv(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) inv.a[i][j] = aug.a[i][cols + j];
    return inv;
  }

  /// Kernel basis; free variables set to 1 in column order.
  std::vector<std::vector<K>> kernel_basis() const {
    Mat m = *this;
    std::vector<int> piv;
    m.echelonize(&piv);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<K>> basis;
    for (int f = 0; f < cols; ++f) {
      if (is_piv[f]) continue;
      std::vector<K> v(cols, K());
      v[f] = K(1);
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.a[r][f];
      basis.push_back(std::move(v));
    }
    return basis;
  }
};

using MatQ = Mat<Rat>;

}  // namespace cubinf
