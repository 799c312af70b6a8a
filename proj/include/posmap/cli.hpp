#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posmap/json_io.hpp"

// Job-oriented front end: evaluate detectors on gallery or user-supplied
// states and channels, sweep a family parameter onto CSV/JSON, locate
// detection thresholds by bisection, and run the discrimination pipeline.

namespace posmap::cli {

struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
};

enum class OutputFormat { Csv, Json };

struct JobConfig {
  std::string command;  // eval-state, scan-state, eval-channel, scan-channel,
                        // discriminate, thresholds
  Json state;           // state descriptor (family or inline matrix)
  Json channel;         // channel descriptor
  Json map;             // positive-map descriptor
  std::vector<std::string> detectors;  // default depends on the command
  std::optional<GridSpec> grid;
  std::optional<double> param;  // single-point parameter for eval commands
  int n_max = 5;
  int m = 2;
  int r = 1;
  std::uint64_t seed = 0;
  double tol = 1e-4;       // bisection tolerance for thresholds
  std::string out_path;    // empty writes to stdout
  std::optional<OutputFormat> format;
};

JobConfig config_from_json(const Json& j);

// Runs the job and writes its artifacts; throws posmap::Error on failure.
void run(const JobConfig& job);

// run() wrapped into exit-code semantics: 0 success, 2 invalid config,
// 3 numerical failure. Failures emit one-line error JSON on stderr.
int execute_job(const JobConfig& job) noexcept;
int execute_json_config(const std::string& path) noexcept;

// Locates the parameter where `detected` switches, assuming one transition
// inside [lo, hi]; a 32-point pre-scan checks that assumption. Throws
// NoSignChange when the endpoint verdicts agree and NonMonotoneBracket when
// the pre-scan sees more than one transition.
double bisect_onset(const std::function<bool(double)>& detected, double lo,
                    double hi, double tol);

// Worker-pool size for grid evaluation: hardware concurrency capped by the
// POSMAP_THREADS environment variable and the number of grid points.
int worker_count(int jobs);

}  // namespace posmap::cli
