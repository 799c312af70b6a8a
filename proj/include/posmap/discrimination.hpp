#pragma once

#include "posmap/channels.hpp"

// Channel-discrimination side of the detectors: the trace-preserving
// Reduction map, its trace-annihilating extension, the explicit channel pair
// whose scaled difference realizes that extension, the trace-norm witness,
// and the two-state Helstrom bound.

namespace posmap {

// Lambda(X) = (Tr(X) I - k X) / (d - k); exactly trace-preserving, and
// r-positive for k in (1/(r+1), 1/r] like the plain Reduction map.
PositiveMap reduction_tp(double k, int d);

// Output dimension d+1; the appended direction |d> carries -Tr(X), so every
// output is traceless.
PositiveMap trace_annihilating(const PositiveMap& map_tp, int d);

struct ChannelPair {
  Channel s1;
  Channel s2;
  // S1 - S2 = k_scale * Lambda^TA as maps (equivalently on Choi matrices).
  double k_scale = 0.0;
};

// Completes the Jordan decomposition of the trace-annihilating map's Choi
// matrix into two CPTP channels: Choi(TA) = C+ - C-, both sides are padded
// with (c I - M) (x) I/(d+1) for M = Tr_out C+ and c = lambda_max(M), and
// normalized into channel Chois; k_scale = 1/(c d).
ChannelPair channel_pair_from_ta(const PositiveMap& ta, int d);

struct WitnessReport {
  // W = || (id (x) Lambda^TP)(rho) ||_1; equals 1 exactly on states of
  // Schmidt number <= r, exceeds 1 iff the map output has a negative
  // eigenvalue.
  double trace_norm_value = 1.0;
  // k_scale (W - 1) / 2: the success-probability gap over the best
  // Schmidt-number-r strategy for the constructed channel pair.
  double advantage = 0.0;
  double k_scale = 0.0;
  bool has_advantage = false;

  std::string verdict() const {
    return has_advantage ? "advantage" : "no_advantage";
  }
};

inline constexpr double kWitnessTol = 1e-9;

// Witness for Schmidt number > r via the trace norm of the trace-preserving
// Reduction output, with k = 1/r. The B-side dimension is inferred from the
// state.
WitnessReport discrimination_witness(const Mat& rho, int dim_a, int r);

// Optimal two-state discrimination success probability
// (1 + || p rho1 - (1-p) rho2 ||_1) / 2 under priors (p, 1-p).
double helstrom(const Mat& rho1, const Mat& rho2, double p);

// (1/2) || (id (x) S1)(rho) - (id (x) S2)(rho) ||_1 with the explicitly
// constructed pair; equals k_scale (W + 1) / 2.
double end_to_end_advantage(const Mat& rho, int dim_a, int r);

}  // namespace posmap
