#include "posmap/json_io.hpp"

namespace posmap {

namespace {

const Mat kExampleBreuerHallU = [] {
  Mat u = Mat::Zero(3, 3);
  u(0, 1) = -1.0;
  u(1, 0) = 1.0;
  return u;
}();

}  // namespace

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw InvalidConfig("complex entries must be numbers or [re, im] pairs");
}

namespace {

Json entries_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat entries_from_json(const Json& rows) {
  if (!rows.is_array() || rows.empty()) {
    throw InvalidConfig("matrix rows must be a non-empty array");
  }
  const Eigen::Index n_rows = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index n_cols = static_cast<Eigen::Index>(rows[0].size());
  Mat m(n_rows, n_cols);
  for (Eigen::Index i = 0; i < n_rows; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols) {
      throw InvalidConfig("matrix rows must all have the same length");
    }
    for (Eigen::Index j = 0; j < n_cols; ++j) {
      m(i, j) = complex_from_json(row[static_cast<size_t>(j)]);
    }
  }
  return m;
}

}  // namespace

Json matrix_to_json(const Mat& m, int dim_a, int dim_b) {
  Json j;
  j["dim_a"] = dim_a;
  j["dim_b"] = dim_b;
  j["rows"] = entries_to_json(m);
  return j;
}

Json square_matrix_to_json(const Mat& m) { return entries_to_json(m); }

Mat square_matrix_from_json(const Json& j) {
  Mat m = entries_from_json(j);
  if (m.rows() != m.cols()) {
    throw InvalidConfig("expected a square matrix");
  }
  return m;
}

BipartiteState state_matrix_from_json(const Json& j) {
  if (!j.contains("dim_a") || !j.contains("dim_b") || !j.contains("rows")) {
    throw InvalidConfig("state matrix needs fields dim_a, dim_b, rows");
  }
  BipartiteState state;
  state.dim_a = j.at("dim_a").get<int>();
  state.dim_b = j.at("dim_b").get<int>();
  state.rho = entries_from_json(j.at("rows"));
  if (state.dim_a < 1 || state.dim_b < 1 ||
      state.rho.rows() != static_cast<Eigen::Index>(state.dim_a) * state.dim_b ||
      state.rho.rows() != state.rho.cols()) {
    throw InvalidConfig("state matrix dimension does not equal dim_a * dim_b");
  }
  return state;
}

PositiveMap map_from_json(const Json& j, int default_dim) {
  if (!j.is_object() || !j.contains("map")) {
    throw InvalidConfig("map descriptor needs a \"map\" field");
  }
  const std::string name = j.at("map").get<std::string>();
  const int d = j.value("d", default_dim);
  try {
    if (name == "reduction") {
      return PositiveMap::reduction(j.value("k", 1.0), d);
    }
    if (name == "reduction_tp") {
      return PositiveMap::reduction_tp(j.value("k", 1.0), d);
    }
    if (name == "breuer_hall") {
      if (j.contains("U")) {
        return PositiveMap::breuer_hall(square_matrix_from_json(j.at("U")));
      }
      if (d == 3) return PositiveMap::breuer_hall(kExampleBreuerHallU);
      throw InvalidConfig("breuer_hall needs an explicit U for d != 3");
    }
    if (name == "gen_choi" || name == "choi") {
      return PositiveMap::generalized_choi(d, j.value("kk", 1));
    }
    if (name == "transpose") return PositiveMap::transpose(d);
    if (name == "identity") return PositiveMap::identity(d);
    if (name == "custom") {
      if (!j.contains("kraus") || !j.at("kraus").is_array()) {
        throw InvalidConfig("custom map needs a \"kraus\" array");
      }
      std::vector<Mat> kraus;
      for (const Json& op : j.at("kraus")) kraus.push_back(entries_from_json(op));
      return PositiveMap::custom(std::move(kraus), j.value("mu", 1.0), d);
    }
  } catch (const InvalidConfig&) {
    throw;
  } catch (const Error& e) {
    throw InvalidConfig("invalid map descriptor: " + std::string(e.what()));
  }
  throw InvalidConfig("unknown map \"" + name + "\"");
}

Channel channel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("channel")) {
    throw InvalidConfig("channel descriptor needs a \"channel\" field");
  }
  const std::string name = j.at("channel").get<std::string>();
  try {
    if (name == "depolarizing") {
      return Channel::depolarizing(j.value("d", 3), j.value("p", 1.0));
    }
    if (name == "dephasing") {
      return Channel::dephasing(j.value("d", 3), j.value("v", 1.0));
    }
    if (name == "kraus") {
      if (!j.contains("ops") || !j.at("ops").is_array()) {
        throw InvalidConfig("kraus channel needs an \"ops\" array");
      }
      std::vector<Mat> ops;
      for (const Json& op : j.at("ops")) ops.push_back(entries_from_json(op));
      return Channel::from_kraus(std::move(ops));
    }
  } catch (const InvalidConfig&) {
    throw;
  } catch (const Error& e) {
    throw InvalidConfig("invalid channel descriptor: " + std::string(e.what()));
  }
  throw InvalidConfig("unknown channel \"" + name + "\"");
}

Json report_to_json(const DetectionReport& report) {
  Json j;
  j["detector"] = detector_name(report.detector);
  j["scalars"] = Json::object();
  for (const auto& [key, value] : report.scalars) j["scalars"][key] = value;
  j["verdict"] = report.verdict();
  j["tolerance"] = report.tolerance;
  return j;
}

Json witness_to_json(const WitnessReport& report) {
  Json j;
  j["trace_norm_value"] = report.trace_norm_value;
  j["advantage"] = report.advantage;
  j["k_scale"] = report.k_scale;
  j["verdict"] = report.verdict();
  return j;
}

}  // namespace posmap
