#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "posmap/errors.hpp"

// Dense complex linear-algebra kernel. Everything here is a pure function;
// composite indices are row-major throughout: (i, k) -> i * dim_b + k.

namespace posmap {

using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using Complex = std::complex<double>;

// Relative Hermiticity tolerance used by every eigenvalue-based routine.
inline constexpr double kHermitianTol = 1e-12;

enum class Subsystem { A, B };

bool is_hermitian(const Mat& m, double tol = kHermitianTol);

// Throws NonHermitianInput; `where` names the offending operation.
void require_hermitian(const Mat& m, const char* where,
                       double tol = kHermitianTol);

// Kronecker product with (i, k) -> i * dim(b) + k composite indexing.
Mat kron(const Mat& a, const Mat& b);
Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

// Eigenvalues of a Hermitian matrix, sorted ascending. The input is
// symmetrized as (M + M^dag)/2 before the solve to suppress round-off drift.
RealVec hermitian_eigenvalues(const Mat& m);

struct EigenSystem {
  RealVec values;  // ascending
  Mat vectors;     // column i pairs with values[i]
};

// Eigenvalues and eigenvectors; each eigenvector's phase is fixed by making
// its largest-magnitude component real and positive.
EigenSystem hermitian_eigensystem(const Mat& m);

// Transpose on one tensor factor only. An involution; preserves the trace
// exactly.
Mat partial_transpose(const Mat& rho, int dim_a, int dim_b, Subsystem which);

// Trace out the second factor: result(i, j) = Tr of block (i, j).
Mat partial_trace_second(const Mat& m, int dim_a, int dim_b);

// Reorders a bipartite matrix so the factors trade places:
// entry ((i,k),(j,l)) moves to ((k,i),(l,j)).
Mat swap_subsystems(const Mat& rho, int dim_a, int dim_b);

// Projector onto the maximally entangled state (1/sqrt(d)) sum_i |ii>.
Mat max_entangled_projector(int d);

// Sum of absolute eigenvalues. Hermitian inputs only.
double trace_norm(const Mat& m);

// (Tr M, Tr M^2, ..., Tr M^n_max) computed from the spectrum.
std::vector<double> trace_powers(const Mat& m, int n_max);

// Applies `action` to each dim_b x dim_b block of rho, treating rho as a
// dim_a x dim_a grid of blocks. This realizes (id_A (x) Lambda)(rho); the
// action's output dimension may differ from dim_b.
template <typename Action>
Mat apply_to_second(const Action& action, const Mat& rho, int dim_a,
                    int dim_b) {
  if (dim_a < 1 || dim_b < 1) {
    throw DimensionMismatch("apply_to_second: subsystem dimensions must be positive");
  }
  if (rho.rows() != rho.cols() ||
      rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatch(
        "apply_to_second: matrix is " + std::to_string(rho.rows()) + "x" +
        std::to_string(rho.cols()) + ", expected square of dimension " +
        std::to_string(dim_a * dim_b));
  }
  Mat first = action(Mat(rho.block(0, 0, dim_b, dim_b)));
  const Eigen::Index dim_out = first.rows();
  Mat out(dim_a * dim_out, dim_a * dim_out);
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_a; ++j) {
      if (i == 0 && j == 0) {
        out.block(0, 0, dim_out, dim_out) = first;
        continue;
      }
      Mat block = action(Mat(rho.block(i * dim_b, j * dim_b, dim_b, dim_b)));
      if (block.rows() != dim_out || block.cols() != dim_out) {
        throw DimensionMismatch(
            "apply_to_second: map produced blocks of inconsistent dimension");
      }
      out.block(i * dim_out, j * dim_out, dim_out, dim_out) = block;
    }
  }
  return out;
}

}  // namespace posmap
