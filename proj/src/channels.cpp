#include "posmap/channels.hpp"

#include <cmath>
#include <numbers>

namespace posmap {

namespace {

void require_input_dim(const Mat& rho, int d, const char* where) {
  if (rho.rows() != rho.cols() || rho.rows() != d) {
    throw DimensionMismatch(std::string(where) + ": state is " +
                            std::to_string(rho.rows()) + "-dimensional, channel expects " +
                            std::to_string(d));
  }
}

}  // namespace

Channel Channel::depolarizing(int d, double p) {
  if (d < 2) {
    throw ParameterOutOfRange("Channel::depolarizing: dimension must be at least 2");
  }
  if (p < 0.0 || p > 1.0) {
    throw ParameterOutOfRange("Channel::depolarizing: p must lie in [0, 1]");
  }
  return Channel(Variant(Depolarizing{d, p}));
}

Channel Channel::dephasing(int d, double v) {
  if (d < 2) {
    throw ParameterOutOfRange("Channel::dephasing: dimension must be at least 2");
  }
  if (v < 0.0 || v > 1.0) {
    throw ParameterOutOfRange("Channel::dephasing: v must lie in [0, 1]");
  }
  return Channel(Variant(Dephasing{d, v}));
}

Channel Channel::from_kraus(std::vector<Mat> ops) {
  if (ops.empty()) {
    throw InvalidChannel("Channel::from_kraus: need at least one Kraus operator");
  }
  const Eigen::Index d_out = ops.front().rows();
  const Eigen::Index d_in = ops.front().cols();
  if (d_in < 1 || d_out < 1) {
    throw InvalidChannel("Channel::from_kraus: Kraus operators must be non-empty");
  }
  Mat completeness = Mat::Zero(d_in, d_in);
  for (const Mat& op : ops) {
    if (op.rows() != d_out || op.cols() != d_in) {
      throw InvalidChannel("Channel::from_kraus: Kraus operators must share one shape");
    }
    completeness += op.adjoint() * op;
  }
  if ((completeness - Mat::Identity(d_in, d_in)).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidChannel(
        "Channel::from_kraus: sum K^dag K deviates from the identity (not trace-preserving)");
  }
  return Channel(Variant(Kraus{std::move(ops)}));
}

Mat Channel::apply(const Mat& rho) const {
  return std::visit(
      [&rho](const auto& ch) -> Mat {
        using T = std::decay_t<decltype(ch)>;
        if constexpr (std::is_same_v<T, Depolarizing>) {
          require_input_dim(rho, ch.d, "Channel::apply(depolarizing)");
          return ch.p * rho + (1.0 - ch.p) / double(ch.d) * rho.trace() *
                                  Mat::Identity(ch.d, ch.d);
        } else if constexpr (std::is_same_v<T, Dephasing>) {
          require_input_dim(rho, ch.d, "Channel::apply(dephasing)");
          Mat out = ch.v * rho;
          for (int i = 0; i < ch.d; ++i) {
            out(i, i) += (1.0 - ch.v) * rho(i, i);
          }
          return out;
        } else {
          static_assert(std::is_same_v<T, Kraus>);
          require_input_dim(rho, static_cast<int>(ch.ops.front().cols()),
                            "Channel::apply(kraus)");
          const Eigen::Index d_out = ch.ops.front().rows();
          Mat out = Mat::Zero(d_out, d_out);
          for (const Mat& op : ch.ops) out += op * rho * op.adjoint();
          return out;
        }
      },
      spec_);
}

Mat Channel::choi() const {
  const int d = input_dim();
  return apply_to_second([this](const Mat& x) { return apply(x); },
                         max_entangled_projector(d), d, d);
}

std::vector<Mat> Channel::kraus_operators() const {
  return std::visit(
      [](const auto& ch) -> std::vector<Mat> {
        using T = std::decay_t<decltype(ch)>;
        if constexpr (std::is_same_v<T, Depolarizing>) {
          // K_0 = sqrt(p + (1-p)/d^2) I plus the d^2 - 1 Heisenberg-Weyl
          // displacements X^a Z^b weighted sqrt((1-p)/d^2).
          const int d = ch.d;
          std::vector<Mat> ops;
          ops.reserve(static_cast<size_t>(d) * d);
          const double w = (1.0 - ch.p) / double(d * d);
          ops.push_back(std::sqrt(ch.p + w) * Mat::Identity(d, d));
          const Complex omega =
              std::exp(Complex(0.0, 2.0 * std::numbers::pi / double(d)));
          for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
              if (a == 0 && b == 0) continue;
              Mat op = Mat::Zero(d, d);
              for (int j = 0; j < d; ++j) {
                op((j + a) % d, j) = std::pow(omega, double(b * j));
              }
              ops.push_back(std::sqrt(w) * op);
            }
          }
          return ops;
        } else if constexpr (std::is_same_v<T, Dephasing>) {
          const int d = ch.d;
          std::vector<Mat> ops;
          ops.reserve(static_cast<size_t>(d) + 1);
          ops.push_back(std::sqrt(ch.v) * Mat::Identity(d, d));
          for (int i = 0; i < d; ++i) {
            Mat proj = Mat::Zero(d, d);
            proj(i, i) = std::sqrt(1.0 - ch.v);
            ops.push_back(proj);
          }
          return ops;
        } else {
          static_assert(std::is_same_v<T, Kraus>);
          return ch.ops;
        }
      },
      spec_);
}

int Channel::input_dim() const {
  return std::visit(
      [](const auto& ch) -> int {
        using T = std::decay_t<decltype(ch)>;
        if constexpr (std::is_same_v<T, Kraus>) {
          return static_cast<int>(ch.ops.front().cols());
        } else {
          return ch.d;
        }
      },
      spec_);
}

int Channel::output_dim() const {
  return std::visit(
      [](const auto& ch) -> int {
        using T = std::decay_t<decltype(ch)>;
        if constexpr (std::is_same_v<T, Kraus>) {
          return static_cast<int>(ch.ops.front().rows());
        } else {
          return ch.d;
        }
      },
      spec_);
}

std::string Channel::describe() const {
  return std::visit(
      [](const auto& ch) -> std::string {
        using T = std::decay_t<decltype(ch)>;
        if constexpr (std::is_same_v<T, Depolarizing>) {
          return "depolarizing(d=" + std::to_string(ch.d) + ",p=" + std::to_string(ch.p) + ")";
        } else if constexpr (std::is_same_v<T, Dephasing>) {
          return "dephasing(d=" + std::to_string(ch.d) + ",v=" + std::to_string(ch.v) + ")";
        } else {
          static_assert(std::is_same_v<T, Kraus>);
          return "kraus(n=" + std::to_string(ch.ops.size()) + "," +
                 std::to_string(ch.ops.front().rows()) + "x" +
                 std::to_string(ch.ops.front().cols()) + ")";
        }
      },
      spec_);
}

ChannelMomentVector channel_moments(const Channel& channel, int r, int n_max,
                                    std::optional<double> k_override) {
  if (channel.input_dim() != channel.output_dim()) {
    throw DimensionMismatch(
        "channel_moments: moment detectors require a square channel (d_out == d_in)");
  }
  const int d = channel.input_dim();
  if (r < 1 || r > d - 1) {
    throw ParameterOutOfRange("channel_moments: need 1 <= r <= d-1");
  }
  const double k = k_override.value_or(k_default_for_r(r));
  const PositiveMap map = PositiveMap::reduction(k, d);
  MomentVector moments = map_moments(map, channel.choi(), d, d, n_max);
  moments.source = "channel=" + channel.describe() + " " + moments.source;
  return ChannelMomentVector{std::move(moments), r, k};
}

DetectionReport theorem4_check(const ChannelMomentVector& e, double tol) {
  DetectionReport report = theorem1_check(e.moments, tol);
  report.detector = Detector::T4;
  report.scalars["r"] = static_cast<double>(e.r);
  return report;
}

DetectionReport theorem5_check(const ChannelMomentVector& e, int m,
                               double tol) {
  DetectionReport report = hankel_criterion(e.moments, m, Detector::T5, tol);
  report.scalars["r"] = static_cast<double>(e.r);
  return report;
}

double snbc_threshold(NoiseFamily family, int d, int r) {
  if (d < 2 || r < 1 || r > d - 1) {
    throw ParameterOutOfRange("snbc_threshold: need d >= 2 and 1 <= r <= d-1");
  }
  switch (family) {
    case NoiseFamily::Depolarizing:
      return (double(r) * d - 1.0) / (double(d) * d - 1.0);
    case NoiseFamily::Dephasing:
      return (double(r) - 1.0) / (double(d) - 1.0);
  }
  throw ParameterOutOfRange("snbc_threshold: unknown family");
}

}  // namespace posmap
