#pragma once

#include <cstdint>

#include "posmap/linalg.hpp"

// Parametrized gallery of the bipartite state families used by the detector
// examples, plus a seeded sampler of random states with bounded Schmidt
// number for soundness tests.

namespace posmap {

// Projector onto (1/sqrt(d)) sum_i |ii>, d >= 2.
Mat max_entangled(int d);

// I_{d^2} / d^2 on C^d (x) C^d.
Mat max_mixed(int d);

// p |phi+><phi+| + (1-p)/d^2 I. Any p giving a PSD matrix is accepted
// (this extends below 0 down to -1/(d^2-1)); otherwise InvalidState.
Mat isotropic(int d, double p);

// v |phi+><phi+| + (1-v)/d sum_i |ii><ii|, v in [0, 1].
Mat dephased_mes(int d, double v);

// The 9x9 PPT-entangled pattern with parameter p > 0, normalized to unit
// trace by its actual trace.
Mat stormer_bound(double p);

// Rank-4 PPT complement of the five-vector tiles product basis in C^3 (x) C^3.
Mat tiles_upb_state();

inline const double kNptAlphaMin = (25.0 - std::sqrt(141.0)) / 50.0;
inline const double kNptAlphaMax = (25.0 + std::sqrt(141.0)) / 100.0;

// The 9x9 NPT family with alpha in [kNptAlphaMin, kNptAlphaMax]. Outside
// that interval the matrix is not PSD; construction is allowed only with
// allow_invalid = true, otherwise ParameterOutOfRange.
Mat npt_family(double alpha, bool allow_invalid = false);

struct SchmidtBoundedSample {
  int d = 0;
  int r = 0;
  int num_terms = 0;
  std::uint64_t seed = 0;
  Mat state;
};

// Convex mixture of `num_terms` random pure states, each of Schmidt rank at
// most r, so the result has Schmidt number <= r by construction.
//
// Deterministic in `seed`. The random stream is mt19937_64(seed) mapped to
// uniforms u = (x >> 11) * 2^-53, consumed in this order: the mixture
// weights (num_terms exponentials, normalized), then per term the r Schmidt
// coefficients (exponentials, normalized), the A-side basis (d x r Gaussian
// entries via Box-Muller, column-major, re before im, then modified
// Gram-Schmidt), and the B-side basis the same way.
SchmidtBoundedSample random_schmidt_bounded(int d, int r, int num_terms,
                                            std::uint64_t seed);

}  // namespace posmap
