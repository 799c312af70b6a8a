#include "posmap/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace posmap {

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

void require_hermitian(const Mat& m, const char* where, double tol) {
  if (!is_hermitian(m, tol)) {
    throw NonHermitianInput(std::string(where) +
                            ": input matrix is not Hermitian within tolerance");
  }
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

RealVec hermitian_eigenvalues(const Mat& m) {
  require_hermitian(m, "hermitian_eigenvalues");
  Mat sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

EigenSystem hermitian_eigensystem(const Mat& m) {
  require_hermitian(m, "hermitian_eigensystem");
  Mat sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
  EigenSystem sys{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < sys.vectors.cols(); ++c) {
    Eigen::Index imax = 0;
    sys.vectors.col(c).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = sys.vectors(imax, c);
    const double mag = std::abs(pivot);
    if (mag > 0.0) sys.vectors.col(c) *= std::conj(pivot) / mag;
  }
  return sys;
}

Mat partial_transpose(const Mat& rho, int dim_a, int dim_b, Subsystem which) {
  if (dim_a < 1 || dim_b < 1 || rho.rows() != rho.cols() ||
      rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatch("partial_transpose: matrix dimension must equal dim_a * dim_b");
  }
  Mat out(rho.rows(), rho.cols());
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_a; ++j) {
      auto block = rho.block(i * dim_b, j * dim_b, dim_b, dim_b);
      if (which == Subsystem::A) {
        out.block(j * dim_b, i * dim_b, dim_b, dim_b) = block;
      } else {
        out.block(i * dim_b, j * dim_b, dim_b, dim_b) = block.transpose();
      }
    }
  }
  return out;
}

Mat partial_trace_second(const Mat& m, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatch("partial_trace_second: matrix dimension must equal dim_a * dim_b");
  }
  Mat out = Mat::Zero(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_a; ++j) {
      out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    }
  }
  return out;
}

Mat swap_subsystems(const Mat& rho, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || rho.rows() != rho.cols() ||
      rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatch("swap_subsystems: matrix dimension must equal dim_a * dim_b");
  }
  Mat out(rho.rows(), rho.cols());
  for (int i = 0; i < dim_a; ++i) {
    for (int k = 0; k < dim_b; ++k) {
      for (int j = 0; j < dim_a; ++j) {
        for (int l = 0; l < dim_b; ++l) {
          out(k * dim_a + i, l * dim_a + j) = rho(i * dim_b + k, j * dim_b + l);
        }
      }
    }
  }
  return out;
}

Mat max_entangled_projector(int d) {
  if (d < 2) {
    throw ParameterOutOfRange("max_entangled_projector: dimension must be at least 2");
  }
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d * d);
  for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(double(d));
  return phi * phi.adjoint();
}

double trace_norm(const Mat& m) {
  require_hermitian(m, "trace_norm");
  return hermitian_eigenvalues(m).cwiseAbs().sum();
}

std::vector<double> trace_powers(const Mat& m, int n_max) {
  if (n_max < 1) {
    throw ParameterOutOfRange("trace_powers: n_max must be at least 1");
  }
  RealVec eig = hermitian_eigenvalues(m);
  std::vector<double> powers(n_max, 0.0);
  RealVec running = eig;
  for (int n = 1; n <= n_max; ++n) {
    powers[n - 1] = running.sum();
    if (n < n_max) running = running.cwiseProduct(eig);
  }
  return powers;
}

}  // namespace posmap
