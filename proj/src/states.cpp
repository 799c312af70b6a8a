#include "posmap/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace posmap {

namespace {

Eigen::VectorXcd basis_ket(int i, int d) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  v(i) = 1.0;
  return v;
}

void require_valid_state(const Mat& rho, const char* where) {
  const RealVec eig = hermitian_eigenvalues(rho);
  if (eig(0) < -1e-10) {
    throw InvalidState(std::string(where) + ": construction is not PSD (min eigenvalue " +
                       std::to_string(eig(0)) + ")");
  }
}

}  // namespace

Mat max_entangled(int d) { return max_entangled_projector(d); }

Mat max_mixed(int d) {
  if (d < 1) {
    throw ParameterOutOfRange("max_mixed: dimension must be positive");
  }
  return Mat::Identity(d * d, d * d) / double(d * d);
}

Mat isotropic(int d, double p) {
  Mat rho = p * max_entangled(d) +
            (1.0 - p) / double(d * d) * Mat::Identity(d * d, d * d);
  require_valid_state(rho, "isotropic");
  return rho;
}

Mat dephased_mes(int d, double v) {
  if (v < 0.0 || v > 1.0) {
    throw ParameterOutOfRange("dephased_mes: v must lie in [0, 1]");
  }
  Mat rho = v * max_entangled(d);
  for (int i = 0; i < d; ++i) {
    rho(i * d + i, i * d + i) += (1.0 - v) / double(d);
  }
  return rho;
}

Mat stormer_bound(double p) {
  if (!(p > 0.0)) {
    throw ParameterOutOfRange("stormer_bound: p must be positive");
  }
  Mat m = Mat::Zero(9, 9);
  // |00>+|11>+|22> coherences.
  for (int a : {0, 4, 8}) {
    for (int b : {0, 4, 8}) m(a, b) = 1.0;
  }
  m(1, 1) = p;
  m(2, 2) = 1.0 / p;
  m(3, 3) = 1.0 / p;
  m(5, 5) = p;
  m(6, 6) = p;
  m(7, 7) = 1.0 / p;
  // The printed prefactor 1/(1 + p + 1/p) does not give unit trace for this
  // pattern; we normalize by the actual trace 3(1 + p + 1/p).
  return m / m.trace().real();
}

Mat tiles_upb_state() {
  const int d = 3;
  const Eigen::VectorXcd k0 = basis_ket(0, d);
  const Eigen::VectorXcd k1 = basis_ket(1, d);
  const Eigen::VectorXcd k2 = basis_ket(2, d);
  const Eigen::VectorXcd m01 = (k0 - k1) / std::sqrt(2.0);
  const Eigen::VectorXcd m12 = (k1 - k2) / std::sqrt(2.0);
  const Eigen::VectorXcd plus = (k0 + k1 + k2) / std::sqrt(3.0);
  const std::vector<Eigen::VectorXcd> tiles = {
      kron(k0, m01), kron(k2, m12), kron(m01, k2), kron(m12, k0),
      kron(plus, plus)};
  Mat rho = Mat::Identity(9, 9);
  for (const auto& u : tiles) rho -= u * u.adjoint();
  return rho / 4.0;
}

Mat npt_family(double alpha, bool allow_invalid) {
  if (!allow_invalid &&
      (alpha < kNptAlphaMin - 1e-12 || alpha > kNptAlphaMax + 1e-12)) {
    throw ParameterOutOfRange("npt_family: alpha outside the PSD interval [" +
                              std::to_string(kNptAlphaMin) + ", " +
                              std::to_string(kNptAlphaMax) + "]");
  }
  Mat rho = Mat::Zero(9, 9);
  const double c = -11.0 / 50.0;
  rho(0, 0) = (1.0 - alpha) / 2.0;
  rho(0, 8) = c;
  rho(8, 0) = c;
  rho(4, 4) = 0.5 - alpha;
  rho(4, 5) = c;
  rho(5, 4) = c;
  rho(5, 5) = alpha;
  rho(8, 8) = alpha / 2.0;
  return rho;
}

namespace {

// Deterministic uniform/Gaussian stream backed by mt19937_64; see the
// header comment of random_schmidt_bounded for the draw order contract.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double exponential() {
    // -log(1 - u) with u in [0, 1); u = 0 maps to 0.
    return -std::log1p(-uniform());
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::vector<double> simplex_point(RandomStream& rng, int n) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& v : w) {
    v = rng.exponential();
    sum += v;
  }
  if (sum <= 0.0) {
    for (double& v : w) v = 1.0 / n;
    return w;
  }
  for (double& v : w) v /= sum;
  return w;
}

// d x r matrix with orthonormal columns via modified Gram-Schmidt on
// Gaussian draws; near-degenerate columns are redrawn.
Mat random_orthonormal_columns(RandomStream& rng, int d, int r) {
  Mat q(d, r);
  for (int c = 0; c < r; ++c) {
    while (true) {
      for (int i = 0; i < d; ++i) q(i, c) = rng.complex_gaussian();
      for (int prev = 0; prev < c; ++prev) {
        q.col(c) -= q.col(prev).dot(q.col(c)) * q.col(prev);
      }
      const double norm = q.col(c).norm();
      if (norm > 1e-8) {
        q.col(c) /= norm;
        break;
      }
    }
  }
  return q;
}

}  // namespace

SchmidtBoundedSample random_schmidt_bounded(int d, int r, int num_terms,
                                            std::uint64_t seed) {
  if (d < 1 || r < 1 || r > d) {
    throw ParameterOutOfRange("random_schmidt_bounded: need 1 <= r <= d");
  }
  if (num_terms < 1) {
    throw ParameterOutOfRange("random_schmidt_bounded: num_terms must be at least 1");
  }
  RandomStream rng(seed);
  const std::vector<double> weights = simplex_point(rng, num_terms);
  Mat rho = Mat::Zero(d * d, d * d);
  for (int t = 0; t < num_terms; ++t) {
    const std::vector<double> schmidt = simplex_point(rng, r);
    const Mat basis_a = random_orthonormal_columns(rng, d, r);
    const Mat basis_b = random_orthonormal_columns(rng, d, r);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    for (int i = 0; i < r; ++i) {
      const Eigen::VectorXcd a = basis_a.col(i);
      const Eigen::VectorXcd b = basis_b.col(i);
      psi += std::sqrt(schmidt[static_cast<size_t>(i)]) * kron(a, b);
    }
    rho += weights[static_cast<size_t>(t)] * (psi * psi.adjoint());
  }
  return SchmidtBoundedSample{d, r, num_terms, seed, std::move(rho)};
}

}  // namespace posmap
