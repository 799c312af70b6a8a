#include "posmap/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "posmap/states.hpp"

namespace posmap::cli {

namespace {

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw InvalidConfig("cannot open output file \"" + path + "\"");
  }
  out << text;
}

double grid_param(const GridSpec& grid, int i) {
  if (i == grid.steps - 1) return grid.stop;
  return grid.start +
         static_cast<double>(i) * (grid.stop - grid.start) / (grid.steps - 1);
}

template <typename Fn>
void parallel_for(int n, const Fn& fn) {
  const int workers = worker_count(n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    int i;
    while ((i = next.fetch_add(1)) < n) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ---- target resolution -----------------------------------------------------

struct StateSource {
  std::string name;
  int dim_a = 3;
  int dim_b = 3;
  bool parametrized = false;
  double default_param = 0.0;
  std::function<Mat(double)> make;
};

// Applies the "side" selector: side "A" presents the swapped state so the
// detector map acts on the original first subsystem.
StateSource with_side(StateSource src, const Json& desc) {
  const std::string side = desc.value("side", std::string("B"));
  if (side == "B") return src;
  if (side != "A") {
    throw InvalidConfig("state \"side\" must be \"A\" or \"B\"");
  }
  auto inner = src.make;
  const int da = src.dim_a;
  const int db = src.dim_b;
  src.make = [inner, da, db](double param) {
    return swap_subsystems(inner(param), da, db);
  };
  std::swap(src.dim_a, src.dim_b);
  return src;
}

StateSource resolve_state(const Json& desc, std::uint64_t seed) {
  if (desc.is_null()) {
    throw InvalidConfig("this command needs a state descriptor");
  }
  if (desc.contains("rows")) {
    BipartiteState st = state_matrix_from_json(desc);
    StateSource src;
    src.name = "matrix";
    src.dim_a = st.dim_a;
    src.dim_b = st.dim_b;
    src.make = [rho = st.rho](double) { return rho; };
    return with_side(std::move(src), desc);
  }
  if (desc.contains("matrix")) return resolve_state(desc.at("matrix"), seed);
  if (!desc.contains("family")) {
    throw InvalidConfig("state descriptor needs a \"family\" or inline matrix");
  }
  const std::string family = desc.at("family").get<std::string>();
  const int d = desc.value("d", 3);
  StateSource src;
  src.name = family;
  src.dim_a = d;
  src.dim_b = d;
  if (family == "isotropic") {
    src.parametrized = true;
    src.default_param = 1.0;
    src.make = [d](double p) { return isotropic(d, p); };
  } else if (family == "dephased_mes" || family == "dephased") {
    src.parametrized = true;
    src.default_param = 1.0;
    src.make = [d](double v) { return dephased_mes(d, v); };
  } else if (family == "stormer" || family == "stormer_bound") {
    src.dim_a = src.dim_b = 3;
    src.parametrized = true;
    src.default_param = 1.0;
    src.make = [](double p) { return stormer_bound(p); };
  } else if (family == "tiles" || family == "tiles_upb") {
    src.dim_a = src.dim_b = 3;
    src.make = [](double) { return tiles_upb_state(); };
  } else if (family == "npt" || family == "npt_family") {
    src.dim_a = src.dim_b = 3;
    src.parametrized = true;
    src.default_param = 0.3;
    src.make = [](double alpha) { return npt_family(alpha); };
  } else if (family == "max_entangled" || family == "mes") {
    src.make = [d](double) { return max_entangled(d); };
  } else if (family == "max_mixed") {
    src.make = [d](double) { return max_mixed(d); };
  } else if (family == "schmidt_bounded") {
    const int r = desc.value("r", 1);
    const int terms = desc.value("terms", 1);
    src.make = [d, r, terms, seed](double) {
      return random_schmidt_bounded(d, r, terms, seed).state;
    };
  } else {
    throw InvalidConfig("unknown state family \"" + family + "\"");
  }
  return with_side(std::move(src), desc);
}

struct ChannelSource {
  std::string name;
  int d = 3;
  bool parametrized = false;
  std::function<Channel(double)> make;
};

ChannelSource resolve_channel(const Json& desc) {
  if (desc.is_null()) {
    throw InvalidConfig("this command needs a channel descriptor");
  }
  if (!desc.contains("channel")) {
    throw InvalidConfig("channel descriptor needs a \"channel\" field");
  }
  const std::string name = desc.at("channel").get<std::string>();
  const int d = desc.value("d", 3);
  ChannelSource src;
  src.name = name;
  src.d = d;
  if (name == "depolarizing") {
    src.parametrized = true;
    src.make = [d](double p) { return Channel::depolarizing(d, p); };
  } else if (name == "dephasing") {
    src.parametrized = true;
    src.make = [d](double v) { return Channel::dephasing(d, v); };
  } else if (name == "kraus") {
    Channel ch = channel_from_json(desc);
    src.d = ch.input_dim();
    src.make = [ch](double) { return ch; };
  } else {
    throw InvalidConfig("unknown channel \"" + name + "\"");
  }
  return src;
}

// ---- detector plumbing -----------------------------------------------------

const std::set<std::string> kStateDetectors = {"t1", "t2", "t3", "p3ppt",
                                               "hankel_pt"};
const std::set<std::string> kChannelDetectors = {"t4", "t5"};

std::vector<std::string> detectors_or_default(const JobConfig& job,
                                              bool channel_side) {
  std::vector<std::string> list = job.detectors;
  if (list.empty()) {
    list = channel_side ? std::vector<std::string>{"t4", "t5"}
                        : std::vector<std::string>{"t1", "t2"};
  }
  const auto& allowed = channel_side ? kChannelDetectors : kStateDetectors;
  for (const std::string& name : list) {
    if (!allowed.contains(name)) {
      throw InvalidConfig("detector \"" + name + "\" is not valid for this command");
    }
  }
  return list;
}

MomentVector moments_from_eigenvalues(const RealVec& eig, int n_max,
                                      std::string source) {
  MomentVector s;
  s.source = std::move(source);
  s.values.resize(static_cast<size_t>(n_max));
  RealVec running = eig;
  for (int n = 1; n <= n_max; ++n) {
    s.values[static_cast<size_t>(n - 1)] = running.sum();
    if (n < n_max) running = running.cwiseProduct(eig);
  }
  return s;
}

struct RowResult {
  double param = 0.0;
  std::vector<double> moments;
  double det_h1 = std::numeric_limits<double>::quiet_NaN();
  double det_h2 = std::numeric_limits<double>::quiet_NaN();
  double min_eig = 0.0;
  std::vector<DetectionReport> reports;  // aligned with the detector list
};

RowResult state_row(const StateSource& src, const PositiveMap& map,
                    const std::vector<std::string>& detectors, double param,
                    int n_max, int m) {
  const Mat rho = src.make(param);
  const Mat s_op = normalized_output(map, rho, src.dim_a, src.dim_b);
  const RealVec eig = hermitian_eigenvalues(s_op);
  const MomentVector s = moments_from_eigenvalues(eig, n_max, map.describe());

  RowResult row;
  row.param = param;
  row.moments = s.values;
  row.min_eig = eig(0);
  if (s.order() >= 3) row.det_h1 = hankel_matrix(s, 1).determinant();
  if (s.order() >= 5) row.det_h2 = hankel_matrix(s, 2).determinant();
  for (const std::string& name : detectors) {
    if (name == "t1") {
      row.reports.push_back(theorem1_check(s));
    } else if (name == "t2") {
      row.reports.push_back(hankel_criterion(s, m, Detector::T2));
    } else if (name == "t3") {
      row.reports.push_back(hankel_criterion(s, m, Detector::T3));
    } else if (name == "p3ppt") {
      row.reports.push_back(
          p3_ppt_check(pt_moments(rho, src.dim_a, src.dim_b, 3)));
    } else {
      row.reports.push_back(pt_hankel_check(
          pt_moments(rho, src.dim_a, src.dim_b, std::max(3, 2 * m + 1)), m));
    }
  }
  return row;
}

RowResult channel_row(const ChannelSource& src,
                      const std::vector<std::string>& detectors, double param,
                      int r, double k, int n_max, int m) {
  const Channel channel = src.make(param);
  if (channel.input_dim() != channel.output_dim()) {
    throw DimensionMismatch(
        "channel moments require a square channel (d_out == d_in)");
  }
  const int d = channel.input_dim();
  const PositiveMap map = PositiveMap::reduction(k, d);
  const Mat e_op = normalized_output(map, channel.choi(), d, d);
  const RealVec eig = hermitian_eigenvalues(e_op);
  ChannelMomentVector e{
      moments_from_eigenvalues(eig, n_max, channel.describe()), r, k};

  RowResult row;
  row.param = param;
  row.moments = e.moments.values;
  row.min_eig = eig(0);
  if (e.moments.order() >= 3) row.det_h1 = hankel_matrix(e.moments, 1).determinant();
  if (e.moments.order() >= 5) row.det_h2 = hankel_matrix(e.moments, 2).determinant();
  for (const std::string& name : detectors) {
    if (name == "t4") {
      row.reports.push_back(theorem4_check(e));
    } else {
      row.reports.push_back(theorem5_check(e, m));
    }
  }
  return row;
}

// ---- output assembly -------------------------------------------------------

std::string csv_text(const std::vector<RowResult>& rows,
                     const std::vector<std::string>& detectors, int n_max,
                     bool channel_side) {
  std::ostringstream out;
  const char letter = channel_side ? 'e' : 's';
  out << "param";
  for (int n = 1; n <= n_max; ++n) out << ',' << letter << n;
  out << ",det_H1,det_H2,min_eig_" << (channel_side ? 'E' : 'S');
  for (const std::string& name : detectors) out << ',' << name;
  out << '\n';
  for (const RowResult& row : rows) {
    out << fmt12(row.param);
    for (double v : row.moments) out << ',' << fmt12(v);
    out << ',' << fmt12(row.det_h1) << ',' << fmt12(row.det_h2) << ','
        << fmt12(row.min_eig);
    for (const DetectionReport& report : row.reports) {
      out << ',' << (report.detected ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

Json row_to_json(const RowResult& row, const std::vector<std::string>& detectors,
                 bool channel_side) {
  Json j;
  j["param"] = row.param;
  j[channel_side ? "e" : "s"] = row.moments;
  j["det_H1"] = row.det_h1;
  j["det_H2"] = row.det_h2;
  j[channel_side ? "min_eig_E" : "min_eig_S"] = row.min_eig;
  Json reports = Json::object();
  for (size_t i = 0; i < detectors.size(); ++i) {
    reports[detectors[i]] = report_to_json(row.reports[i]);
  }
  j["reports"] = std::move(reports);
  return j;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

OutputFormat format_or(const JobConfig& job, OutputFormat fallback) {
  return job.format.value_or(fallback);
}

// ---- commands ---------------------------------------------------------------

Json default_map_descriptor(const JobConfig& job) {
  Json map;
  map["map"] = "reduction";
  map["k"] = k_default_for_r(job.r);
  return map;
}

void run_eval_state(const JobConfig& job) {
  const StateSource src = resolve_state(job.state, job.seed);
  const Json map_desc = job.map.is_null() ? default_map_descriptor(job) : job.map;
  const PositiveMap map = map_from_json(map_desc, src.dim_b);
  const std::vector<std::string> detectors = detectors_or_default(job, false);
  const double param = job.param.value_or(src.default_param);
  const RowResult row =
      state_row(src, map, detectors, param, job.n_max, job.m);

  if (format_or(job, OutputFormat::Json) == OutputFormat::Csv) {
    write_text(job.out_path, csv_text({row}, detectors, job.n_max, false));
    return;
  }
  Json j;
  j["command"] = "eval-state";
  j["state"] = job.state;
  j["map"] = map_desc;
  j["n_max"] = job.n_max;
  j["m"] = job.m;
  Json body = row_to_json(row, detectors, false);
  if (!src.parametrized) body.erase("param");
  j.update(body);
  if (src.dim_a == src.dim_b) {
    j["schmidt_number_lower_bound"] =
        schmidt_number_lower_bound(src.make(param), src.dim_a, src.dim_b, job.m);
  }
  write_text(job.out_path, json_text(j));
}

GridSpec require_grid(const JobConfig& job) {
  if (!job.grid) throw InvalidConfig("scan commands need a grid");
  if (job.grid->steps < 2) throw InvalidConfig("grid needs at least 2 steps");
  return *job.grid;
}

void run_scan_state(const JobConfig& job) {
  const StateSource src = resolve_state(job.state, job.seed);
  if (!src.parametrized) {
    throw InvalidConfig("state family \"" + src.name + "\" has no parameter to scan");
  }
  const GridSpec grid = require_grid(job);
  const Json map_desc = job.map.is_null() ? default_map_descriptor(job) : job.map;
  const PositiveMap map = map_from_json(map_desc, src.dim_b);
  const std::vector<std::string> detectors = detectors_or_default(job, false);

  std::vector<RowResult> rows(static_cast<size_t>(grid.steps));
  parallel_for(grid.steps, [&](int i) {
    rows[static_cast<size_t>(i)] = state_row(src, map, detectors,
                                             grid_param(grid, i), job.n_max,
                                             job.m);
  });

  if (format_or(job, OutputFormat::Csv) == OutputFormat::Csv) {
    write_text(job.out_path, csv_text(rows, detectors, job.n_max, false));
    return;
  }
  Json j;
  j["command"] = "scan-state";
  j["state"] = job.state;
  j["map"] = map_desc;
  j["n_max"] = job.n_max;
  j["m"] = job.m;
  Json out_rows = Json::array();
  for (const RowResult& row : rows) out_rows.push_back(row_to_json(row, detectors, false));
  j["rows"] = std::move(out_rows);
  write_text(job.out_path, json_text(j));
}

double channel_k(const JobConfig& job) {
  if (!job.map.is_null() && job.map.contains("k")) {
    return job.map.at("k").get<double>();
  }
  return k_default_for_r(job.r);
}

void run_eval_channel(const JobConfig& job) {
  const ChannelSource src = resolve_channel(job.channel);
  const std::vector<std::string> detectors = detectors_or_default(job, true);
  const double param = job.param.value_or(1.0);
  const RowResult row = channel_row(src, detectors, param, job.r,
                                    channel_k(job), job.n_max, job.m);
  if (format_or(job, OutputFormat::Json) == OutputFormat::Csv) {
    write_text(job.out_path, csv_text({row}, detectors, job.n_max, true));
    return;
  }
  Json j;
  j["command"] = "eval-channel";
  j["channel"] = job.channel;
  j["r"] = job.r;
  j["n_max"] = job.n_max;
  j["m"] = job.m;
  Json body = row_to_json(row, detectors, true);
  if (!src.parametrized) body.erase("param");
  j.update(body);
  write_text(job.out_path, json_text(j));
}

void run_scan_channel(const JobConfig& job) {
  const ChannelSource src = resolve_channel(job.channel);
  if (!src.parametrized) {
    throw InvalidConfig("channel \"" + src.name + "\" has no parameter to scan");
  }
  const GridSpec grid = require_grid(job);
  const std::vector<std::string> detectors = detectors_or_default(job, true);
  const double k = channel_k(job);

  std::vector<RowResult> rows(static_cast<size_t>(grid.steps));
  parallel_for(grid.steps, [&](int i) {
    rows[static_cast<size_t>(i)] = channel_row(src, detectors,
                                               grid_param(grid, i), job.r, k,
                                               job.n_max, job.m);
  });

  if (format_or(job, OutputFormat::Csv) == OutputFormat::Csv) {
    write_text(job.out_path, csv_text(rows, detectors, job.n_max, true));
    return;
  }
  Json j;
  j["command"] = "scan-channel";
  j["channel"] = job.channel;
  j["r"] = job.r;
  j["n_max"] = job.n_max;
  j["m"] = job.m;
  Json out_rows = Json::array();
  for (const RowResult& row : rows) out_rows.push_back(row_to_json(row, detectors, true));
  j["rows"] = std::move(out_rows);
  write_text(job.out_path, json_text(j));
}

void run_discriminate(const JobConfig& job) {
  const StateSource src = resolve_state(job.state, job.seed);
  const double param = job.param.value_or(src.default_param);
  const Mat rho = src.make(param);
  const WitnessReport witness = discrimination_witness(rho, src.dim_a, job.r);
  const double e2e = end_to_end_advantage(rho, src.dim_a, job.r);
  Json j;
  j["command"] = "discriminate";
  j["state"] = job.state;
  if (src.parametrized) j["param"] = param;
  j["r"] = job.r;
  j["witness"] = witness_to_json(witness);
  j["end_to_end_advantage"] = e2e;
  j["witness_consistency"] = std::abs(
      e2e - witness.k_scale * (witness.trace_norm_value + 1.0) / 2.0);
  write_text(job.out_path, json_text(j));
}

void run_thresholds(const JobConfig& job) {
  const bool channel_side = !job.channel.is_null();
  std::vector<std::string> detectors = detectors_or_default(job, channel_side);
  const std::string detector = detectors.front();
  double lo = 0.0;
  double hi = 1.0;
  if (job.grid) {
    lo = job.grid->start;
    hi = job.grid->stop;
  }

  std::function<bool(double)> predicate;
  Json target;
  if (channel_side) {
    const ChannelSource src = resolve_channel(job.channel);
    if (!src.parametrized) {
      throw InvalidConfig("thresholds needs a parametrized channel family");
    }
    const double k = channel_k(job);
    predicate = [&src, &job, detector, k](double param) {
      const RowResult row = channel_row(src, {detector}, param, job.r, k,
                                        job.n_max, job.m);
      return row.reports.front().detected;
    };
    target = job.channel;
  } else {
    const StateSource src = resolve_state(job.state, job.seed);
    if (!src.parametrized) {
      throw InvalidConfig("thresholds needs a parametrized state family");
    }
    const Json map_desc = job.map.is_null() ? default_map_descriptor(job) : job.map;
    const PositiveMap map = map_from_json(map_desc, src.dim_b);
    predicate = [&src, &map, &job, detector](double param) {
      const RowResult row = state_row(src, map, {detector}, param, job.n_max,
                                      job.m);
      return row.reports.front().detected;
    };
    target = job.state;
    target["map"] = map_desc;
  }

  const double onset = bisect_onset(predicate, lo, hi, job.tol);
  Json j;
  j["command"] = "thresholds";
  j["target"] = target;
  j["detector"] = detector;
  j["bracket"] = Json::array({lo, hi});
  j["tol"] = job.tol;
  j["onset"] = onset;
  write_text(job.out_path, json_text(j));
}

}  // namespace

int worker_count(int jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  int cap = static_cast<int>(hw);
  if (const char* env = std::getenv("POSMAP_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) cap = std::min(cap, requested);
  }
  return std::max(1, std::min(cap, jobs));
}

double bisect_onset(const std::function<bool(double)>& detected, double lo,
                    double hi, double tol) {
  if (!(lo < hi) || !(tol > 0.0)) {
    throw ParameterOutOfRange("bisect_onset: need lo < hi and tol > 0");
  }
  constexpr int kPrescan = 32;
  std::vector<unsigned char> verdicts(kPrescan);
  for (int i = 0; i < kPrescan; ++i) {
    const double x = (i == kPrescan - 1)
                         ? hi
                         : lo + static_cast<double>(i) * (hi - lo) / (kPrescan - 1);
    verdicts[static_cast<size_t>(i)] = detected(x) ? 1 : 0;
  }
  if (verdicts.front() == verdicts.back()) {
    throw NoSignChange("bisect_onset: detector verdict agrees at both bracket ends");
  }
  int transitions = 0;
  for (int i = 0; i + 1 < kPrescan; ++i) {
    if (verdicts[static_cast<size_t>(i)] != verdicts[static_cast<size_t>(i + 1)]) {
      ++transitions;
    }
  }
  if (transitions != 1) {
    throw NonMonotoneBracket(
        "bisect_onset: verdict is not monotone over the bracket (" +
        std::to_string(transitions) + " transitions in the pre-scan)");
  }
  const bool lo_verdict = verdicts.front() != 0;
  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2.0;
    if (detected(mid) == lo_verdict) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0;
}

JobConfig config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("command")) {
    throw InvalidConfig("job config needs a \"command\" field");
  }
  JobConfig job;
  job.command = j.at("command").get<std::string>();
  static const std::set<std::string> kCommands = {
      "eval-state", "scan-state",   "eval-channel",
      "scan-channel", "discriminate", "thresholds"};
  if (!kCommands.contains(job.command)) {
    throw InvalidConfig("unknown command \"" + job.command + "\"");
  }
  if (j.contains("state")) job.state = j.at("state");
  if (j.contains("channel")) job.channel = j.at("channel");
  if (j.contains("map")) job.map = j.at("map");
  if (j.contains("detectors")) {
    if (!j.at("detectors").is_array()) {
      throw InvalidConfig("\"detectors\" must be an array of names");
    }
    for (const Json& name : j.at("detectors")) {
      job.detectors.push_back(name.get<std::string>());
    }
  }
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    GridSpec grid;
    grid.start = g.value("start", 0.0);
    grid.stop = g.value("stop", 1.0);
    grid.steps = g.value("steps", 2);
    if (!(grid.start < grid.stop)) {
      throw InvalidConfig("grid needs start < stop");
    }
    job.grid = grid;
  }
  if (j.contains("param")) job.param = j.at("param").get<double>();
  job.n_max = j.value("n_max", 5);
  job.m = j.value("m", 2);
  job.r = j.value("r", 1);
  job.seed = j.value("seed", std::uint64_t{0});
  job.tol = j.value("tol", 1e-4);
  if (job.n_max < 3) throw InvalidConfig("n_max must be at least 3");
  if (job.m < 1) throw InvalidConfig("m must be at least 1");
  if (job.n_max < 2 * job.m + 1) {
    throw InvalidConfig("n_max must be at least 2m+1 for the requested Hankel order");
  }
  if (job.r < 1) throw InvalidConfig("r must be at least 1");
  if (!(job.tol > 0.0)) throw InvalidConfig("tol must be positive");
  if (j.contains("output")) {
    const Json& o = j.at("output");
    job.out_path = o.value("path", std::string{});
    if (o.contains("format")) {
      const std::string fmt = o.at("format").get<std::string>();
      if (fmt == "csv") {
        job.format = OutputFormat::Csv;
      } else if (fmt == "json") {
        job.format = OutputFormat::Json;
      } else {
        throw InvalidConfig("output format must be \"csv\" or \"json\"");
      }
    }
  }
  return job;
}

void run(const JobConfig& job) {
  if (job.command == "eval-state") {
    run_eval_state(job);
  } else if (job.command == "scan-state") {
    run_scan_state(job);
  } else if (job.command == "eval-channel") {
    run_eval_channel(job);
  } else if (job.command == "scan-channel") {
    run_scan_channel(job);
  } else if (job.command == "discriminate") {
    run_discriminate(job);
  } else if (job.command == "thresholds") {
    run_thresholds(job);
  } else {
    throw InvalidConfig("unknown command \"" + job.command + "\"");
  }
}

namespace {

int report_error(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = Json{{"type", kind}, {"message", message}};
  std::cerr << j.dump() << std::endl;
  return kind == "InvalidConfig" ? 2 : 3;
}

}  // namespace

int execute_job(const JobConfig& job) noexcept {
  try {
    run(job);
    return 0;
  } catch (const Error& e) {
    return report_error(e.kind(), e.what());
  } catch (const Json::exception& e) {
    return report_error("InvalidConfig", e.what());
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what());
  }
}

int execute_json_config(const std::string& path) noexcept {
  try {
    std::ifstream in(path);
    if (!in) {
      throw InvalidConfig("cannot open config file \"" + path + "\"");
    }
    Json j = Json::parse(in);
    return execute_job(config_from_json(j));
  } catch (const Error& e) {
    return report_error(e.kind(), e.what());
  } catch (const Json::exception& e) {
    return report_error("InvalidConfig", e.what());
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what());
  }
}

}  // namespace posmap::cli
