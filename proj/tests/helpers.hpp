#pragma once

#include <random>

#include "posmap/linalg.hpp"

// Shared fixtures for the unit suites: seeded random matrices and small
// comparison helpers. These generators are deliberately independent of the
// library's own sampler.

namespace testutil {

using posmap::Complex;
using posmap::Mat;

inline Mat random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

inline Mat random_hermitian(std::mt19937_64& rng, int n) {
  Mat g = random_matrix(rng, n, n);
  return (g + g.adjoint()) / 2.0;
}

inline Mat random_density(std::mt19937_64& rng, int n) {
  Mat g = random_matrix(rng, n, n);
  Mat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline Mat random_unitary(std::mt19937_64& rng, int n) {
  Mat g = random_matrix(rng, n, n);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  // Fix the phase convention so the result is deterministic in the seed.
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex diag = r(i, i);
    if (std::abs(diag) > 0.0) q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil
