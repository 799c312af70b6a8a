#pragma once

#include <map>
#include <string>
#include <vector>

#include "posmap/maps.hpp"

// Normalized map-output moments s_n, Hankel matrices, and the moment-based
// detectors, plus the PT-moment baseline (p_n, p3-PPT, Hankel on p).

namespace posmap {

enum class Detector { T1, T2, T3, T4, T5, P3PPT, HankelPT };

std::string detector_name(Detector d);

struct MomentVector {
  std::vector<double> values;  // values[i] holds s_{i+1}
  std::string source;

  int order() const { return static_cast<int>(values.size()); }
  // 1-based accessor; throws InsufficientMoments past the computed depth.
  double s(int n) const;
};

struct DetectionReport {
  Detector detector = Detector::T1;
  std::map<std::string, double> scalars;
  bool detected = false;
  double tolerance = 0.0;

  std::string verdict() const { return detected ? "detected" : "not_detected"; }
};

// Default decision margins for the strict inequalities.
inline constexpr double kTheorem1Tol = 1e-10;
inline constexpr double kHankelTol = 1e-12;

// S = (id (x) map)(rho) / Tr[...]; Hermitian and unit trace, not necessarily
// PSD. Throws InvalidState if rho is not a density matrix and
// DegenerateNormalization if the trace of the map output vanishes.
Mat normalized_output(const PositiveMap& map, const Mat& rho, int dim_a,
                      int dim_b);

// s_n = Tr[S^n] for n = 1..n_max (n_max >= 3).
MomentVector map_moments(const PositiveMap& map, const Mat& rho, int dim_a,
                         int dim_b, int n_max);

// Detected iff s_2^2 - s_3 > tol; for Reduction(k) with k in
// (1/(r+1), 1/r] a detection certifies Schmidt number > r.
DetectionReport theorem1_check(const MomentVector& s,
                               double tol = kTheorem1Tol);

// (m+1) x (m+1) real Hankel matrix with entry (i, j) = s_{i+j+1}.
Eigen::MatrixXd hankel_matrix(const MomentVector& s, int m);

// Detected iff det H_m < -tol; the report also carries the minimum
// eigenvalue of H_m. `label` selects the semantic flavor (T2 for
// Schmidt-number maps, T3 for the separability maps).
DetectionReport hankel_criterion(const MomentVector& s, int m,
                                 Detector label = Detector::T2,
                                 double tol = kHankelTol);

// PT-moments p_n = Tr[(rho^{T_A})^n].
MomentVector pt_moments(const Mat& rho, int dim_a, int dim_b, int n_max);

// Detected iff p_2^2 - p_3 p_1 > tol (violation implies NPT).
DetectionReport p3_ppt_check(const MomentVector& p, double tol = kTheorem1Tol);

// Hankel criterion on PT-moments.
DetectionReport pt_hankel_check(const MomentVector& p, int m,
                                double tol = kHankelTol);

// Certified lower bound on the Schmidt number: 1 + the largest r in
// {1, .., d-1} for which T1 or the order-m Hankel criterion fires with
// Reduction(k = 1/r), or 1 when none fires. Requires dim_a == dim_b.
int schmidt_number_lower_bound(const Mat& rho, int dim_a, int dim_b, int m);

}  // namespace posmap
