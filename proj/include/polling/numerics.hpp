// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace polling {

using Vec = std::vector<double>;

/// Dense square matrix, row major. Sizes here are the number of queues, so
/// no effort is spent on anything beyond straightforward O(n^3) routines.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

Vec matvec(const Matrix& m, const Vec& x);

/// Solves m x = b by Gaussian elimination with partial pivoting.
/// Throws std::runtime_error on a (numerically) singular system.
Vec solve_linear(Matrix m, Vec b);

struct PowerResult {
  double value = 0.0;
  Vec vector;  // nonnegative, ||.||_1 = 1
  int iterations = 0;
  bool converged = false;
};

/// Power iteration for an entrywise nonnegative matrix. A period-2 cycle in
/// the iterates is broken by averaging two successive iterates.
PowerResult power_iteration_nonneg(const Matrix& m, double tol = 1e-12,
                                   long max_iter = 100000);

/// Strong connectivity of the directed graph with an edge i -> j whenever
/// the off-diagonal entry m(i,j) is nonzero.
bool irreducible_offdiag(const Matrix& m, double tol = 0.0);

}  // namespace polling
