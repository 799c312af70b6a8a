#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posmap/moments.hpp"

// CPTP channels (named noise families and raw Kraus lists), their Choi
// states, channel moments e_n, and the Schmidt-number-breaking detectors.

namespace posmap {

class Channel {
 public:
  // K_d(rho) = p rho + (1-p)/d Tr(rho) I.
  static Channel depolarizing(int d, double p);
  // P_d(rho) = v rho + (1-v) sum_i <i|rho|i> |i><i|; the state-dependent
  // second term makes the map trace-preserving and keeps its Choi state
  // equal to the dephased maximally entangled state.
  static Channel dephasing(int d, double v);
  // Validates Kraus completeness sum K^dag K = I within 1e-10.
  static Channel from_kraus(std::vector<Mat> ops);

  Mat apply(const Mat& rho) const;
  // (id (x) E)(|phi+><phi+|); PSD with unit trace.
  Mat choi() const;
  // Explicit Kraus realization (materialized for the named families).
  std::vector<Mat> kraus_operators() const;

  int input_dim() const;
  int output_dim() const;
  std::string describe() const;

  struct Depolarizing {
    int d;
    double p;
  };
  struct Dephasing {
    int d;
    double v;
  };
  struct Kraus {
    std::vector<Mat> ops;
  };
  using Variant = std::variant<Depolarizing, Dephasing, Kraus>;
  const Variant& spec() const { return spec_; }

 private:
  explicit Channel(Variant spec) : spec_(std::move(spec)) {}
  Variant spec_;
};

struct ChannelMomentVector {
  MomentVector moments;  // e_1 .. e_n
  int r = 1;             // positivity order of the Reduction map used
  double k = 1.0;        // the k actually used (defaults to 1/r)
};

// e_n = Tr[E^n] with E the normalized output of (id (x) Reduction(k)) on the
// channel's Choi state; k defaults to 1/r. Requires a square channel.
ChannelMomentVector channel_moments(const Channel& channel, int r, int n_max,
                                    std::optional<double> k_override = {});

// Detected iff e_2^2 - e_3 > tol: the channel is not r-Schmidt-number
// breaking (for r = 1, not entanglement breaking).
DetectionReport theorem4_check(const ChannelMomentVector& e,
                               double tol = kTheorem1Tol);

// Hankel version: detected iff det H_m(e) < -tol.
DetectionReport theorem5_check(const ChannelMomentVector& e, int m,
                               double tol = kHankelTol);

enum class NoiseFamily { Depolarizing, Dephasing };

// Exact SNBC thresholds: (r d - 1)/(d^2 - 1) for depolarizing noise and
// (r - 1)/(d - 1) for dephasing noise.
double snbc_threshold(NoiseFamily family, int d, int r);

}  // namespace posmap
