#include "posmap/moments.hpp"

#include <cmath>

namespace posmap {

namespace {

void require_density_matrix(const Mat& rho, const char* where) {
  require_hermitian(rho, where);
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho.trace().imag()) > 1e-10) {
    throw InvalidState(std::string(where) + ": state trace differs from 1");
  }
  const RealVec eig = hermitian_eigenvalues(rho);
  if (eig(0) < -1e-10) {
    throw InvalidState(std::string(where) + ": state has eigenvalue " +
                       std::to_string(eig(0)) + " below -1e-10");
  }
}

MomentVector moments_from_operator(const Mat& s_op, int n_max,
                                   std::string source) {
  MomentVector out;
  out.values = trace_powers(s_op, n_max);
  out.source = std::move(source);
  return out;
}

}  // namespace

std::string detector_name(Detector d) {
  switch (d) {
    case Detector::T1: return "T1";
    case Detector::T2: return "T2";
    case Detector::T3: return "T3";
    case Detector::T4: return "T4";
    case Detector::T5: return "T5";
    case Detector::P3PPT: return "P3PPT";
    case Detector::HankelPT: return "HankelPT";
  }
  return "unknown";
}

double MomentVector::s(int n) const {
  if (n < 1 || n > order()) {
    throw InsufficientMoments("moment s_" + std::to_string(n) +
                              " requested, only " + std::to_string(order()) +
                              " computed");
  }
  return values[static_cast<size_t>(n - 1)];
}

Mat normalized_output(const PositiveMap& map, const Mat& rho, int dim_a,
                      int dim_b) {
  require_density_matrix(rho, "normalized_output");
  Mat raw = apply_to_second(map, rho, dim_a, dim_b);
  const double trace = raw.trace().real();
  if (std::abs(trace) < 1e-9) {
    throw DegenerateNormalization(
        "normalized_output: map output has trace " + std::to_string(trace));
  }
  return (raw + raw.adjoint()) / (2.0 * trace);
}

MomentVector map_moments(const PositiveMap& map, const Mat& rho, int dim_a,
                         int dim_b, int n_max) {
  if (n_max < 3) {
    throw ParameterOutOfRange("map_moments: n_max must be at least 3");
  }
  Mat s_op = normalized_output(map, rho, dim_a, dim_b);
  return moments_from_operator(s_op, n_max,
                               "map=" + map.describe() + " dims=" +
                                   std::to_string(dim_a) + "x" +
                                   std::to_string(dim_b));
}

DetectionReport theorem1_check(const MomentVector& s, double tol) {
  const double s2 = s.s(2);
  const double s3 = s.s(3);
  DetectionReport report;
  report.detector = Detector::T1;
  report.tolerance = tol;
  report.scalars["s2"] = s2;
  report.scalars["s3"] = s3;
  report.scalars["s2_sq_minus_s3"] = s2 * s2 - s3;
  report.detected = (s2 * s2 - s3) > tol;
  return report;
}

Eigen::MatrixXd hankel_matrix(const MomentVector& s, int m) {
  if (m < 0) {
    throw ParameterOutOfRange("hankel_matrix: order must be non-negative");
  }
  if (s.order() < 2 * m + 1) {
    throw InsufficientMoments("hankel_matrix: H_" + std::to_string(m) +
                              " needs moments up to s_" +
                              std::to_string(2 * m + 1) + ", only " +
                              std::to_string(s.order()) + " available");
  }
  Eigen::MatrixXd h(m + 1, m + 1);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      h(i, j) = s.s(i + j + 1);
    }
  }
  return h;
}

namespace {

DetectionReport hankel_report(const MomentVector& s, int m, Detector label,
                              double tol) {
  const Eigen::MatrixXd h = hankel_matrix(s, m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h,
                                                        Eigen::EigenvaluesOnly);
  DetectionReport report;
  report.detector = label;
  report.tolerance = tol;
  report.scalars["m"] = static_cast<double>(m);
  report.scalars["det_H"] = h.determinant();
  report.scalars["min_eig_H"] = solver.eigenvalues()(0);
  report.detected = report.scalars["det_H"] < -tol;
  return report;
}

}  // namespace

DetectionReport hankel_criterion(const MomentVector& s, int m, Detector label,
                                 double tol) {
  return hankel_report(s, m, label, tol);
}

MomentVector pt_moments(const Mat& rho, int dim_a, int dim_b, int n_max) {
  if (n_max < 1) {
    throw ParameterOutOfRange("pt_moments: n_max must be at least 1");
  }
  require_density_matrix(rho, "pt_moments");
  Mat pt = partial_transpose(rho, dim_a, dim_b, Subsystem::A);
  return moments_from_operator(pt, n_max,
                               "pt dims=" + std::to_string(dim_a) + "x" +
                                   std::to_string(dim_b));
}

DetectionReport p3_ppt_check(const MomentVector& p, double tol) {
  const double p1 = p.s(1);
  const double p2 = p.s(2);
  const double p3 = p.s(3);
  DetectionReport report;
  report.detector = Detector::P3PPT;
  report.tolerance = tol;
  report.scalars["p1"] = p1;
  report.scalars["p2"] = p2;
  report.scalars["p3"] = p3;
  report.scalars["p2_sq_minus_p3_p1"] = p2 * p2 - p3 * p1;
  report.detected = (p2 * p2 - p3 * p1) > tol;
  return report;
}

DetectionReport pt_hankel_check(const MomentVector& p, int m, double tol) {
  return hankel_report(p, m, Detector::HankelPT, tol);
}

int schmidt_number_lower_bound(const Mat& rho, int dim_a, int dim_b, int m) {
  if (dim_a != dim_b) {
    throw DimensionMismatch("schmidt_number_lower_bound: requires dim_a == dim_b");
  }
  const int d = dim_a;
  const int n_max = std::max(3, 2 * m + 1);
  int bound = 1;
  for (int r = 1; r <= d - 1; ++r) {
    const PositiveMap map = PositiveMap::reduction(k_default_for_r(r), d);
    const MomentVector s = map_moments(map, rho, dim_a, dim_b, n_max);
    const bool fired = theorem1_check(s).detected ||
                       hankel_criterion(s, m).detected;
    if (fired) bound = r + 1;
  }
  return bound;
}

}  // namespace posmap
