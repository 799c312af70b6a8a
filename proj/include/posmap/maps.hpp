#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "posmap/linalg.hpp"

// The positive-map zoo: Reduction(k), Breuer-Hall(U), generalized Choi(d, k),
// plus Transpose/Identity utilities, the general decomposed form
// mu Tr(X) I - Phi(X), and the trace-preserving / trace-annihilating
// Reduction variants used by the channel-discrimination construction.

namespace posmap {

class PositiveMap;

// Half-open positivity interval for the Reduction map: Reduction(k) is
// r-positive but not (r+1)-positive exactly for k in (1/(r+1), 1/r].
struct RPositivityClaim {
  int r = 1;
  double k_min_exclusive = 0.0;
  double k_max_inclusive = 1.0;
};

RPositivityClaim r_for_k(double k);
double k_default_for_r(int r);

class PositiveMap {
 public:
  static PositiveMap reduction(double k, int d);
  // (Tr(X) I - k X) / (d - k); trace-preserving by construction.
  static PositiveMap reduction_tp(double k, int d);
  static PositiveMap breuer_hall(const Mat& u);
  static PositiveMap generalized_choi(int d, int k);
  static PositiveMap transpose(int d);
  static PositiveMap identity(int d);
  // General form mu Tr(X) I - sum_i K_i X K_i^dag with Kraus-given Phi.
  static PositiveMap custom(std::vector<Mat> kraus_plus, double mu, int d);
  // Wraps a trace-preserving map into a trace-annihilating one on an output
  // space enlarged by one dimension: X -> inner(X) (+) (-Tr X)|f><f|.
  static PositiveMap trace_annihilating_of(PositiveMap inner_tp);

  Mat apply(const Mat& x) const;
  int input_dim() const;
  int output_dim() const;
  std::string describe() const;

  struct Reduction {
    double k;
    int d;
  };
  struct ReductionTp {
    double k;
    int d;
  };
  struct BreuerHall {
    Mat u;
  };
  struct GeneralizedChoi {
    int d;
    int k;
  };
  struct Transpose {
    int d;
  };
  struct Identity {
    int d;
  };
  struct Custom {
    std::vector<Mat> kraus_plus;
    double mu;
    int d;
  };
  struct TraceAnnihilating {
    std::shared_ptr<const PositiveMap> inner;
  };

  using Variant = std::variant<Reduction, ReductionTp, BreuerHall,
                               GeneralizedChoi, Transpose, Identity, Custom,
                               TraceAnnihilating>;

  const Variant& spec() const { return spec_; }

 private:
  explicit PositiveMap(Variant spec) : spec_(std::move(spec)) {}
  Variant spec_;
};

// Raw map actions, also usable without a PositiveMap wrapper.
Mat reduction_apply(double k, const Mat& x);
Mat breuer_hall_apply(const Mat& u, const Mat& x);
Mat generalized_choi_apply(int d, int k, const Mat& x);

// Blockwise (id (x) map) application; dims as in the template overload.
Mat apply_to_second(const PositiveMap& map, const Mat& rho, int dim_a,
                    int dim_b);

// (id (x) map)(|phi+><phi+|) on input dimension d = map.input_dim().
Mat choi_matrix(const PositiveMap& map);

// d * (largest eigenvalue of the Choi matrix); the minimal mu for which
// mu Tr(X) I - map(X) is completely positive.
double mu_of(const PositiveMap& map);

}  // namespace posmap
