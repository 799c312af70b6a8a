#include <CLI11.hpp>

#include "posmap/cli.hpp"

// posmap: moment-based detectors for higher-dimensional entanglement and
// quantum channels. See README.md for the job-config format and examples.

namespace {

using posmap::Json;
using posmap::cli::GridSpec;
using posmap::cli::JobConfig;
using posmap::cli::OutputFormat;

struct Flags {
  std::string config;
  std::string family;
  std::string channel;
  double param = std::numeric_limits<double>::quiet_NaN();
  int d = 3;
  std::string map;
  double k = std::numeric_limits<double>::quiet_NaN();
  int kk = 1;
  int r = 1;
  int m = 2;
  int n_max = 5;
  std::string grid;
  std::uint64_t seed = 0;
  double tol = 1e-4;
  std::string out;
  std::string format;
  std::string detectors;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &grid.start, &grid.stop,
                  &grid.steps, &trailing) != 3) {
    throw posmap::InvalidConfig("--grid expects lo:hi:steps, got \"" + text + "\"");
  }
  return grid;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  for (char c : text) {
    if (c == ',') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(token);
  return out;
}

JobConfig job_from_flags(const std::string& command, const Flags& flags) {
  JobConfig job;
  job.command = command;

  const bool channel_command =
      command == "eval-channel" || command == "scan-channel";
  if (!flags.family.empty()) {
    job.state = Json{{"family", flags.family}, {"d", flags.d}};
  }
  if (!flags.channel.empty()) {
    job.channel = Json{{"channel", flags.channel}, {"d", flags.d}};
  }
  // For thresholds, --family may also name a channel family.
  if (command == "thresholds" && job.channel.is_null() &&
      (flags.family == "depolarizing" || flags.family == "dephasing")) {
    job.channel = Json{{"channel", flags.family}, {"d", flags.d}};
    job.state = Json();
  }
  if (channel_command && job.channel.is_null() && !flags.family.empty()) {
    job.channel = Json{{"channel", flags.family}, {"d", flags.d}};
    job.state = Json();
  }

  if (!flags.map.empty() || !std::isnan(flags.k)) {
    Json map;
    map["map"] = flags.map.empty() ? "reduction" : flags.map;
    if (!std::isnan(flags.k)) {
      map["k"] = flags.k;
    } else if (map["map"] == "reduction" || map["map"] == "reduction_tp") {
      map["k"] = 1.0 / flags.r;
    }
    if (map["map"] == "gen_choi" || map["map"] == "choi") map["kk"] = flags.kk;
    job.map = map;
  }

  if (!std::isnan(flags.param)) job.param = flags.param;
  if (!flags.grid.empty()) job.grid = parse_grid(flags.grid);
  if (!flags.detectors.empty()) job.detectors = split_list(flags.detectors);
  job.n_max = flags.n_max;
  job.m = flags.m;
  job.r = flags.r;
  job.seed = flags.seed;
  job.tol = flags.tol;
  job.out_path = flags.out;
  if (!flags.format.empty()) {
    if (flags.format == "csv") {
      job.format = OutputFormat::Csv;
    } else if (flags.format == "json") {
      job.format = OutputFormat::Json;
    } else {
      throw posmap::InvalidConfig("--format must be csv or json");
    }
  }
  return job;
}

void add_common_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config, "JSON job config (overrides other flags)");
  cmd->add_option("--family", flags.family, "named state/channel family");
  cmd->add_option("--channel", flags.channel, "named channel family");
  cmd->add_option("--param", flags.param, "family parameter");
  cmd->add_option("--d", flags.d, "local dimension (default 3)");
  cmd->add_option("--map", flags.map,
                  "positive map: reduction, breuer_hall, gen_choi, transpose, identity");
  cmd->add_option("--k", flags.k, "reduction-map k (default 1/r)");
  cmd->add_option("--kk", flags.kk, "generalized-Choi k parameter");
  cmd->add_option("--r", flags.r, "positivity order r (k defaults to 1/r)");
  cmd->add_option("--m", flags.m, "Hankel order (default 2)");
  cmd->add_option("--nmax", flags.n_max, "moment depth (default 5)");
  cmd->add_option("--grid", flags.grid, "parameter grid lo:hi:steps");
  cmd->add_option("--seed", flags.seed, "RNG seed for sampled inputs");
  cmd->add_option("--tol", flags.tol, "bisection tolerance (thresholds)");
  cmd->add_option("--detectors", flags.detectors,
                  "comma list: t1,t2,t3,p3ppt,hankel_pt / t4,t5");
  cmd->add_option("--out", flags.out, "output path (default stdout)");
  cmd->add_option("--format", flags.format, "csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment-based entanglement and channel detectors"};
  app.require_subcommand(0, 1);
  std::string top_config;
  app.add_option("--config", top_config, "JSON job config (the \"command\" field selects the job)");

  const std::vector<std::string> commands = {"eval-state",   "scan-state",
                                             "eval-channel", "scan-channel",
                                             "discriminate", "thresholds"};
  std::map<std::string, Flags> flag_sets;
  for (const std::string& name : commands) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common_flags(cmd, flag_sets[name]);
  }

  CLI11_PARSE(app, argc, argv);

  if (!top_config.empty()) {
    return posmap::cli::execute_json_config(top_config);
  }
  for (const std::string& name : commands) {
    if (!app.get_subcommand(name)->parsed()) continue;
    const Flags& flags = flag_sets[name];
    if (!flags.config.empty()) {
      return posmap::cli::execute_json_config(flags.config);
    }
    try {
      return posmap::cli::execute_job(job_from_flags(name, flags));
    } catch (const posmap::Error& e) {
      Json err;
      err["error"] = Json{{"type", e.kind()}, {"message", e.what()}};
      std::cerr << err.dump() << std::endl;
      return 2;
    }
  }
  Json err;
  err["error"] = Json{{"type", "InvalidConfig"},
                      {"message", "no subcommand or --config given"}};
  std::cerr << err.dump() << std::endl;
  return 2;
}
