#include "posmap/discrimination.hpp"

#include <cmath>

namespace posmap {

namespace {

void require_bipartite(const Mat& rho, int dim_a, const char* where, int* dim_b) {
  if (dim_a < 1 || rho.rows() != rho.cols() || rho.rows() % dim_a != 0) {
    throw DimensionMismatch(std::string(where) +
                            ": state dimension is not divisible by dim_a");
  }
  *dim_b = static_cast<int>(rho.rows()) / dim_a;
}

// Builds a Kraus channel from a PSD Choi matrix with Tr_out C = I/d_in.
Channel channel_from_choi(const Mat& choi, int d_in, int d_out) {
  const EigenSystem sys = hermitian_eigensystem(choi);
  std::vector<Mat> ops;
  for (Eigen::Index idx = 0; idx < sys.values.size(); ++idx) {
    const double weight = sys.values(idx);
    if (weight <= 1e-14) continue;
    const double scale = std::sqrt(weight * d_in);
    Mat op(d_out, d_in);
    for (int i = 0; i < d_in; ++i) {
      for (int a = 0; a < d_out; ++a) {
        op(a, i) = scale * sys.vectors(i * d_out + a, idx);
      }
    }
    ops.push_back(std::move(op));
  }
  return Channel::from_kraus(std::move(ops));
}

}  // namespace

PositiveMap reduction_tp(double k, int d) {
  return PositiveMap::reduction_tp(k, d);
}

PositiveMap trace_annihilating(const PositiveMap& map_tp, int d) {
  if (map_tp.input_dim() != d) {
    throw DimensionMismatch("trace_annihilating: map does not act on dimension " +
                            std::to_string(d));
  }
  return PositiveMap::trace_annihilating_of(map_tp);
}

ChannelPair channel_pair_from_ta(const PositiveMap& ta, int d) {
  if (ta.input_dim() != d) {
    throw DimensionMismatch("channel_pair_from_ta: map does not act on dimension " +
                            std::to_string(d));
  }
  const int d_out = ta.output_dim();
  const Mat choi_ta = choi_matrix(ta);

  // Jordan split of the Choi matrix into PSD parts.
  const EigenSystem sys = hermitian_eigensystem(choi_ta);
  Mat c_plus = Mat::Zero(choi_ta.rows(), choi_ta.cols());
  for (Eigen::Index i = 0; i < sys.values.size(); ++i) {
    if (sys.values(i) > 0.0) {
      c_plus += sys.values(i) * sys.vectors.col(i) * sys.vectors.col(i).adjoint();
    }
  }
  const Mat c_minus = c_plus - choi_ta;

  // Trace annihilation forces Tr_out C+ = Tr_out C-.
  const Mat m = partial_trace_second(c_plus, d, d_out);
  const RealVec m_eig = hermitian_eigenvalues(m);
  const double c = m_eig(m_eig.size() - 1);
  if (c < 1e-12) {
    throw DegenerateTA("channel_pair_from_ta: trace-annihilating map is numerically zero");
  }

  const Mat completion =
      kron(Mat(c * Mat::Identity(d, d) - m),
           Mat(Mat::Identity(d_out, d_out) / double(d_out)));
  const double norm = c * d;
  const Mat choi_1 = (c_plus + completion) / norm;
  const Mat choi_2 = (c_minus + completion) / norm;

  ChannelPair pair{channel_from_choi(choi_1, d, d_out),
                   channel_from_choi(choi_2, d, d_out), 1.0 / norm};
  return pair;
}

WitnessReport discrimination_witness(const Mat& rho, int dim_a, int r) {
  if (r < 1) {
    throw ParameterOutOfRange("discrimination_witness: r must be at least 1");
  }
  int dim_b = 0;
  require_bipartite(rho, dim_a, "discrimination_witness", &dim_b);
  const double k = k_default_for_r(r);
  const PositiveMap tp = reduction_tp(k, dim_b);
  const Mat output = apply_to_second(tp, rho, dim_a, dim_b);

  WitnessReport report;
  report.trace_norm_value = trace_norm((output + output.adjoint()) / 2.0);
  const ChannelPair pair =
      channel_pair_from_ta(trace_annihilating(tp, dim_b), dim_b);
  report.k_scale = pair.k_scale;
  report.advantage = pair.k_scale * (report.trace_norm_value - 1.0) / 2.0;
  report.has_advantage = report.trace_norm_value > 1.0 + kWitnessTol;
  return report;
}

double helstrom(const Mat& rho1, const Mat& rho2, double p) {
  if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols() ||
      rho1.rows() != rho1.cols()) {
    throw DimensionMismatch("helstrom: states must be square and of equal dimension");
  }
  if (p < 0.0 || p > 1.0) {
    throw ParameterOutOfRange("helstrom: prior must lie in [0, 1]");
  }
  require_hermitian(rho1, "helstrom");
  require_hermitian(rho2, "helstrom");
  return 0.5 * (1.0 + trace_norm(p * rho1 - (1.0 - p) * rho2));
}

double end_to_end_advantage(const Mat& rho, int dim_a, int r) {
  if (r < 1) {
    throw ParameterOutOfRange("end_to_end_advantage: r must be at least 1");
  }
  int dim_b = 0;
  require_bipartite(rho, dim_a, "end_to_end_advantage", &dim_b);
  const PositiveMap tp = reduction_tp(k_default_for_r(r), dim_b);
  const ChannelPair pair =
      channel_pair_from_ta(trace_annihilating(tp, dim_b), dim_b);
  const Mat out1 = apply_to_second(
      [&](const Mat& x) { return pair.s1.apply(x); }, rho, dim_a, dim_b);
  const Mat out2 = apply_to_second(
      [&](const Mat& x) { return pair.s2.apply(x); }, rho, dim_a, dim_b);
  const Mat diff = out1 - out2;
  return 0.5 * trace_norm((diff + diff.adjoint()) / 2.0);
}

}  // namespace posmap
