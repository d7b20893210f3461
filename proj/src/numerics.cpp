// SPDX-License-Identifier: Apache-2.0
#include "polling/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace polling {

Vec matvec(const Matrix& m, const Vec& x) {
  Vec y(m.n, 0.0);
  for (int i = 0; i < m.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.n; ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Vec solve_linear(Matrix m, Vec b) {
  const int n = m.n;
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_linear: size mismatch");
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (std::abs(m(pivot, col)) < 1e-14)
      throw std::runtime_error("solve_linear: singular system");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      std::swap(b[pivot], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      b[r] -= f * b[col];
    }
  }
  Vec x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return x;
}

namespace {

double l1(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double max_abs_diff(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
  return s;
}

}  // namespace

PowerResult power_iteration_nonneg(const Matrix& m, double tol, long max_iter) {
  PowerResult res;
  const int n = m.n;
  res.vector.assign(n, 1.0 / n);
  if (n == 0) return res;
  Vec prev2;  // iterate two steps back, for the period-2 safeguard
  for (long it = 0; it < max_iter; ++it) {
    Vec v = matvec(m, res.vector);
    const double lambda = l1(v);
    if (lambda < 1e-300) {  // w > 0 and Mw = 0: the matrix is zero on the support
      res.value = 0.0;
      res.converged = true;
      res.iterations = static_cast<int>(it + 1);
      return res;
    }
    for (double& x : v) x /= lambda;
    if (max_abs_diff(v, res.vector) < tol) {
      res.value = lambda;
      res.vector = v;
      res.converged = true;
      res.iterations = static_cast<int>(it + 1);
      return res;
    }
    if (!prev2.empty() && max_abs_diff(v, prev2) < tol) {
      // cyclic spectrum: average two successive iterates and keep going
      for (int i = 0; i < n; ++i) v[i] = 0.5 * (v[i] + res.vector[i]);
      const double s = l1(v);
      for (double& x : v) x /= s;
      prev2.clear();
    } else {
      prev2 = res.vector;
    }
    res.value = lambda;
    res.vector = v;
  }
  res.converged = false;
  return res;
}

bool irreducible_offdiag(const Matrix& m, double tol) {
  const int n = m.n;
  if (n <= 1) return true;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (int j = 0; j < n; ++j)
      if (i != j && std::abs(m(i, j)) > tol) reach[i][j] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!reach[i][j]) return false;
  return true;
}

}  // namespace polling
