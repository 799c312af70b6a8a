#include "posmap/maps.hpp"

#include <cmath>

namespace posmap {

namespace {

void require_square(const Mat& x, const char* where) {
  if (x.rows() != x.cols()) {
    throw DimensionMismatch(std::string(where) + ": input must be square");
  }
}

void require_dim(const Mat& x, int d, const char* where) {
  require_square(x, where);
  if (x.rows() != d) {
    throw DimensionMismatch(std::string(where) + ": input is " +
                            std::to_string(x.rows()) + "-dimensional, map acts on " +
                            std::to_string(d));
  }
}

// Diagonal-part pinching: eps(X) = sum_j X_jj |j><j|.
Mat pinch_diagonal(const Mat& x) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  out.diagonal() = x.diagonal();
  return out;
}

}  // namespace

RPositivityClaim r_for_k(double k) {
  if (!(k > 0.0) || k > 1.0) {
    throw ParameterOutOfRange("r_for_k: k must lie in (0, 1], got " +
                              std::to_string(k));
  }
  long long r = static_cast<long long>(std::floor(1.0 / k));
  if (r < 1) r = 1;
  while (r > 1 && k > 1.0 / static_cast<double>(r)) --r;
  while (k <= 1.0 / static_cast<double>(r + 1)) ++r;
  RPositivityClaim claim;
  claim.r = static_cast<int>(r);
  claim.k_min_exclusive = 1.0 / static_cast<double>(r + 1);
  claim.k_max_inclusive = 1.0 / static_cast<double>(r);
  return claim;
}

double k_default_for_r(int r) {
  if (r < 1) {
    throw ParameterOutOfRange("k_default_for_r: r must be at least 1");
  }
  return 1.0 / static_cast<double>(r);
}

Mat reduction_apply(double k, const Mat& x) {
  require_square(x, "reduction_apply");
  return x.trace() * Mat::Identity(x.rows(), x.rows()) - k * x;
}

Mat breuer_hall_apply(const Mat& u, const Mat& x) {
  require_square(x, "breuer_hall_apply");
  if (u.rows() != x.rows() || u.cols() != x.cols()) {
    throw DimensionMismatch("breuer_hall_apply: U and X dimensions differ");
  }
  return x.trace() * Mat::Identity(x.rows(), x.rows()) - x -
         u * x.transpose() * u.adjoint();
}

Mat generalized_choi_apply(int d, int k, const Mat& x) {
  if (k < 1 || k > d - 1) {
    throw ParameterOutOfRange("generalized_choi_apply: need 1 <= k <= d-1");
  }
  require_dim(x, d, "generalized_choi_apply");
  Mat out = double(d - k) * pinch_diagonal(x) - x;
  // S^i X S^i^dag merely shifts indices: entry (a, b) -> X((a+i)%d, (b+i)%d),
  // so its pinching reads shifted diagonal entries.
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j < d; ++j) {
      out(j, j) += x((j + i) % d, (j + i) % d);
    }
  }
  return out;
}

PositiveMap PositiveMap::reduction(double k, int d) {
  if (!(k > 0.0)) {
    throw ParameterOutOfRange("PositiveMap::reduction: k must be positive");
  }
  if (d < 1) {
    throw ParameterOutOfRange("PositiveMap::reduction: dimension must be positive");
  }
  return PositiveMap(Variant(Reduction{k, d}));
}

PositiveMap PositiveMap::reduction_tp(double k, int d) {
  if (!(k > 0.0) || k > 1.0) {
    throw ParameterOutOfRange(
        "PositiveMap::reduction_tp: k must lie in (0, 1], got " +
        std::to_string(k));
  }
  if (d < 2) {
    throw ParameterOutOfRange("PositiveMap::reduction_tp: dimension must be at least 2");
  }
  return PositiveMap(Variant(ReductionTp{k, d}));
}

PositiveMap PositiveMap::breuer_hall(const Mat& u) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw InvalidU("PositiveMap::breuer_hall: U must be square");
  }
  const double scale = std::max(1.0, u.cwiseAbs().maxCoeff());
  if ((u.transpose() + u).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidU("PositiveMap::breuer_hall: U must be antisymmetric (U^T = -U)");
  }
  Eigen::JacobiSVD<Mat> svd(u);
  if (svd.singularValues().maxCoeff() > 1.0 + 1e-12) {
    throw InvalidU("PositiveMap::breuer_hall: U must be a contraction (singular values <= 1)");
  }
  return PositiveMap(Variant(BreuerHall{u}));
}

PositiveMap PositiveMap::generalized_choi(int d, int k) {
  if (d < 2 || k < 1 || k > d - 1) {
    throw ParameterOutOfRange("PositiveMap::generalized_choi: need d >= 2 and 1 <= k <= d-1");
  }
  return PositiveMap(Variant(GeneralizedChoi{d, k}));
}

PositiveMap PositiveMap::transpose(int d) {
  if (d < 1) {
    throw ParameterOutOfRange("PositiveMap::transpose: dimension must be positive");
  }
  return PositiveMap(Variant(Transpose{d}));
}

PositiveMap PositiveMap::identity(int d) {
  if (d < 1) {
    throw ParameterOutOfRange("PositiveMap::identity: dimension must be positive");
  }
  return PositiveMap(Variant(Identity{d}));
}

PositiveMap PositiveMap::custom(std::vector<Mat> kraus_plus, double mu, int d) {
  if (d < 1) {
    throw ParameterOutOfRange("PositiveMap::custom: dimension must be positive");
  }
  if (kraus_plus.empty()) {
    throw ParameterOutOfRange("PositiveMap::custom: need at least one Kraus operator");
  }
  const Eigen::Index d_out = kraus_plus.front().rows();
  for (const Mat& op : kraus_plus) {
    if (op.cols() != d || op.rows() != d_out) {
      throw DimensionMismatch("PositiveMap::custom: Kraus operators must share shape d_out x d");
    }
  }
  return PositiveMap(Variant(Custom{std::move(kraus_plus), mu, d}));
}

PositiveMap PositiveMap::trace_annihilating_of(PositiveMap inner_tp) {
  if (inner_tp.input_dim() != inner_tp.output_dim()) {
    throw DimensionMismatch(
        "trace_annihilating_of: inner map must have equal input and output dimension");
  }
  // Trace preservation is checked exactly via linearity on matrix units.
  const int d = inner_tp.input_dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Mat unit = Mat::Zero(d, d);
      unit(i, j) = 1.0;
      const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      if (std::abs(inner_tp.apply(unit).trace() - expected) > 1e-10) {
        throw InvalidState("trace_annihilating_of: inner map is not trace-preserving");
      }
    }
  }
  auto inner = std::make_shared<const PositiveMap>(std::move(inner_tp));
  return PositiveMap(Variant(TraceAnnihilating{std::move(inner)}));
}

Mat PositiveMap::apply(const Mat& x) const {
  return std::visit(
      [&x](const auto& m) -> Mat {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Reduction>) {
          require_dim(x, m.d, "PositiveMap::apply(reduction)");
          return reduction_apply(m.k, x);
        } else if constexpr (std::is_same_v<T, ReductionTp>) {
          require_dim(x, m.d, "PositiveMap::apply(reduction_tp)");
          return reduction_apply(m.k, x) / (double(m.d) - m.k);
        } else if constexpr (std::is_same_v<T, BreuerHall>) {
          return breuer_hall_apply(m.u, x);
        } else if constexpr (std::is_same_v<T, GeneralizedChoi>) {
          return generalized_choi_apply(m.d, m.k, x);
        } else if constexpr (std::is_same_v<T, Transpose>) {
          require_dim(x, m.d, "PositiveMap::apply(transpose)");
          return x.transpose();
        } else if constexpr (std::is_same_v<T, Identity>) {
          require_dim(x, m.d, "PositiveMap::apply(identity)");
          return x;
        } else if constexpr (std::is_same_v<T, Custom>) {
          require_dim(x, m.d, "PositiveMap::apply(custom)");
          const Eigen::Index d_out = m.kraus_plus.front().rows();
          Mat phi = Mat::Zero(d_out, d_out);
          for (const Mat& op : m.kraus_plus) phi += op * x * op.adjoint();
          return m.mu * x.trace() * Mat::Identity(d_out, d_out) - phi;
        } else {
          static_assert(std::is_same_v<T, TraceAnnihilating>);
          Mat inner = m.inner->apply(x);
          const Eigen::Index d_out = inner.rows() + 1;
          Mat out = Mat::Zero(d_out, d_out);
          out.topLeftCorner(inner.rows(), inner.rows()) = inner;
          out(d_out - 1, d_out - 1) = -x.trace();
          return out;
        }
      },
      spec_);
}

int PositiveMap::input_dim() const {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BreuerHall>) {
          return static_cast<int>(m.u.rows());
        } else if constexpr (std::is_same_v<T, TraceAnnihilating>) {
          return m.inner->input_dim();
        } else {
          return m.d;
        }
      },
      spec_);
}

int PositiveMap::output_dim() const {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BreuerHall>) {
          return static_cast<int>(m.u.rows());
        } else if constexpr (std::is_same_v<T, Custom>) {
          return static_cast<int>(m.kraus_plus.front().rows());
        } else if constexpr (std::is_same_v<T, TraceAnnihilating>) {
          return m.inner->output_dim() + 1;
        } else {
          return m.d;
        }
      },
      spec_);
}

std::string PositiveMap::describe() const {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Reduction>) {
          return "reduction(k=" + std::to_string(m.k) + ",d=" + std::to_string(m.d) + ")";
        } else if constexpr (std::is_same_v<T, ReductionTp>) {
          return "reduction_tp(k=" + std::to_string(m.k) + ",d=" + std::to_string(m.d) + ")";
        } else if constexpr (std::is_same_v<T, BreuerHall>) {
          return "breuer_hall(d=" + std::to_string(m.u.rows()) + ")";
        } else if constexpr (std::is_same_v<T, GeneralizedChoi>) {
          return "gen_choi(d=" + std::to_string(m.d) + ",k=" + std::to_string(m.k) + ")";
        } else if constexpr (std::is_same_v<T, Transpose>) {
          return "transpose(d=" + std::to_string(m.d) + ")";
        } else if constexpr (std::is_same_v<T, Identity>) {
          return "identity(d=" + std::to_string(m.d) + ")";
        } else if constexpr (std::is_same_v<T, Custom>) {
          return "custom(mu=" + std::to_string(m.mu) + ",d=" + std::to_string(m.d) + ")";
        } else {
          static_assert(std::is_same_v<T, TraceAnnihilating>);
          return "trace_annihilating(" + m.inner->describe() + ")";
        }
      },
      spec_);
}

Mat apply_to_second(const PositiveMap& map, const Mat& rho, int dim_a,
                    int dim_b) {
  return apply_to_second([&map](const Mat& x) { return map.apply(x); }, rho,
                         dim_a, dim_b);
}

Mat choi_matrix(const PositiveMap& map) {
  const int d = map.input_dim();
  return apply_to_second(map, max_entangled_projector(d), d, d);
}

double mu_of(const PositiveMap& map) {
  const Mat choi = choi_matrix(map);
  const RealVec eig = hermitian_eigenvalues((choi + choi.adjoint()) / 2.0);
  return static_cast<double>(map.input_dim()) * eig(eig.size() - 1);
}

}  // namespace posmap
