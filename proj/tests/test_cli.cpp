#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "posmap/cli.hpp"

using namespace posmap;
using namespace posmap::cli;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("posmap_test_" + name);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    rows.push_back(std::move(fields));
  }
  return rows;
}

JobConfig isotropic_scan_config(const fs::path& out) {
  Json j;
  j["command"] = "scan-state";
  j["state"] = Json{{"family", "isotropic"}, {"d", 3}};
  j["map"] = Json{{"map", "reduction"}, {"k", 0.5}};
  j["grid"] = Json{{"start", 0.0}, {"stop", 1.0}, {"steps", 101}};
  j["output"] = Json{{"path", out.string()}, {"format", "csv"}};
  return config_from_json(j);
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config_from_json(Json::object()), InvalidConfig);
  CHECK_THROWS_AS(config_from_json(Json{{"command", "bogus"}}), InvalidConfig);
  CHECK_THROWS_AS(
      config_from_json(Json{{"command", "eval-state"}, {"n_max", 2}}),
      InvalidConfig);
  CHECK_THROWS_AS(
      config_from_json(Json{{"command", "eval-state"}, {"m", 3}, {"n_max", 5}}),
      InvalidConfig);
  CHECK_THROWS_AS(config_from_json(Json{
                      {"command", "eval-state"},
                      {"output", Json{{"format", "xml"}}}}),
                  InvalidConfig);
  CHECK_NOTHROW(config_from_json(Json{{"command", "eval-state"},
                                      {"state", Json{{"family", "tiles"}}}}));
}

TEST_CASE("unknown detectors and missing targets are config errors") {
  Json j{{"command", "eval-state"},
         {"state", Json{{"family", "tiles"}}},
         {"detectors", Json::array({"t9"})}};
  CHECK_THROWS_AS(run(config_from_json(j)), InvalidConfig);

  Json no_target{{"command", "eval-state"}};
  CHECK_THROWS_AS(run(config_from_json(no_target)), InvalidConfig);
}

TEST_CASE("isotropic scan finds the Schmidt-number onset just above 5/8") {
  const fs::path out = temp_file("iso_scan.csv");
  run(isotropic_scan_config(out));
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] ==
        std::vector<std::string>{"param", "s1", "s2", "s3", "s4", "s5",
                                 "det_H1", "det_H2", "min_eig_S", "t1", "t2"});
  double first_detected = -1.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][9] == "1") {
      first_detected = std::stod(rows[i][0]);
      break;
    }
  }
  CHECK(first_detected == Catch::Approx(0.63).margin(1e-12));
  fs::remove(out);
}

TEST_CASE("scan output is byte-identical across reruns and thread counts") {
  const fs::path out_a = temp_file("scan_a.csv");
  const fs::path out_b = temp_file("scan_b.csv");

  setenv("POSMAP_THREADS", "1", 1);
  run(isotropic_scan_config(out_a));
  setenv("POSMAP_THREADS", "4", 1);
  run(isotropic_scan_config(out_b));
  unsetenv("POSMAP_THREADS");

  CHECK(slurp(out_a) == slurp(out_b));

  run(isotropic_scan_config(out_a));
  CHECK(slurp(out_a) == slurp(out_b));
  fs::remove(out_a);
  fs::remove(out_b);
}

TEST_CASE("tiles evaluation reports both map detectors") {
  const fs::path out = temp_file("tiles_eval.json");
  Json j;
  j["command"] = "eval-state";
  j["state"] = Json{{"family", "tiles"}};
  j["map"] = Json{{"map", "breuer_hall"}};
  j["m"] = 2;
  j["detectors"] = Json::array({"t1", "t3", "p3ppt"});
  j["output"] = Json{{"path", out.string()}};
  run(config_from_json(j));

  const Json result = Json::parse(slurp(out));
  CHECK(result.at("command") == "eval-state");
  // Regression value for the Breuer-Hall Hankel determinant on this state;
  // the output operator is PSD, so no Hankel criterion can fire.
  CHECK(result.at("det_H2").get<double>() ==
        Catch::Approx(3.532047448806e-07).epsilon(1e-6));
  CHECK(result.at("min_eig_S").get<double>() >= -1e-10);
  CHECK(result.at("reports").at("t3").at("verdict") == "not_detected");
  CHECK(result.at("reports").at("p3ppt").at("verdict") == "not_detected");
  CHECK(result.at("schmidt_number_lower_bound").get<int>() == 1);

  // Round trip: parse -> dump -> parse is the identity.
  CHECK(Json::parse(result.dump(2)) == result);
  fs::remove(out);
}

TEST_CASE("choi map evaluation of the tiles state matches its frozen value") {
  const fs::path out = temp_file("tiles_choi.json");
  Json j;
  j["command"] = "eval-state";
  j["state"] = Json{{"family", "tiles"}};
  j["map"] = Json{{"map", "gen_choi"}, {"kk", 1}};
  j["output"] = Json{{"path", out.string()}};
  run(config_from_json(j));
  const Json result = Json::parse(slurp(out));
  CHECK(result.at("det_H2").get<double>() ==
        Catch::Approx(4.65023318569e-08).epsilon(1e-6));
  fs::remove(out);
}

TEST_CASE("threshold bisection on the dephasing channel") {
  Json j;
  j["command"] = "thresholds";
  j["channel"] = Json{{"channel", "dephasing"}, {"d", 3}};
  j["r"] = 2;
  j["detectors"] = Json::array({"t5"});
  j["grid"] = Json{{"start", 0.4}, {"stop", 0.7}, {"steps", 2}};
  const fs::path out = temp_file("threshold.json");
  j["output"] = Json{{"path", out.string()}};
  run(config_from_json(j));
  const Json result = Json::parse(slurp(out));
  CHECK(result.at("onset").get<double>() == Catch::Approx(0.5).margin(5e-4));
  fs::remove(out);
}

TEST_CASE("bisect_onset validates its bracket") {
  auto step_at_half = [](double x) { return x > 0.5; };
  const double onset = bisect_onset(step_at_half, 0.0, 1.0, 1e-6);
  CHECK(onset == Catch::Approx(0.5).margin(1e-5));

  CHECK_THROWS_AS(bisect_onset([](double) { return true; }, 0.0, 1.0, 1e-4),
                  NoSignChange);
  auto three_transitions = [](double x) {
    return x > 0.25 && (x < 0.5 || x > 0.75);
  };
  CHECK_THROWS_AS(bisect_onset(three_transitions, 0.0, 1.0, 1e-4),
                  NonMonotoneBracket);
  CHECK_THROWS_AS(bisect_onset(step_at_half, 1.0, 0.0, 1e-4),
                  ParameterOutOfRange);
}

TEST_CASE("discriminate command reports the witness pipeline") {
  const fs::path out = temp_file("discriminate.json");
  Json j;
  j["command"] = "discriminate";
  j["state"] = Json{{"family", "max_entangled"}, {"d", 3}};
  j["r"] = 2;
  j["output"] = Json{{"path", out.string()}};
  run(config_from_json(j));
  const Json result = Json::parse(slurp(out));
  CHECK(result.at("witness").at("trace_norm_value").get<double>() ==
        Catch::Approx(17.0 / 15.0).margin(1e-9));
  CHECK(result.at("witness").at("verdict") == "advantage");
  CHECK(result.at("witness_consistency").get<double>() <= 1e-8);
  fs::remove(out);
}

TEST_CASE("channel scan emits the documented column order") {
  const fs::path out = temp_file("chan_scan.csv");
  Json j;
  j["command"] = "scan-channel";
  j["channel"] = Json{{"channel", "depolarizing"}, {"d", 3}};
  j["r"] = 1;
  j["grid"] = Json{{"start", 0.0}, {"stop", 1.0}, {"steps", 11}};
  j["output"] = Json{{"path", out.string()}, {"format", "csv"}};
  run(config_from_json(j));
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] ==
        std::vector<std::string>{"param", "e1", "e2", "e3", "e4", "e5",
                                 "det_H1", "det_H2", "min_eig_E", "t4", "t5"});
  // Detection starts strictly above p = 1/4 on this grid.
  CHECK(rows[3][9] == "0");   // p = 0.2
  CHECK(rows[4][9] == "1");   // p = 0.3
  fs::remove(out);
}

TEST_CASE("exit codes distinguish config and numerical failures") {
  JobConfig bad_detector;
  bad_detector.command = "eval-state";
  bad_detector.state = Json{{"family", "tiles"}};
  bad_detector.detectors = {"t7"};
  CHECK(execute_job(bad_detector) == 2);

  // Scanning the NPT family outside its PSD interval fails numerically.
  JobConfig bad_scan;
  bad_scan.command = "scan-state";
  bad_scan.state = Json{{"family", "npt"}};
  bad_scan.grid = GridSpec{0.0, 1.0, 11};
  bad_scan.out_path = temp_file("never_written.csv").string();
  CHECK(execute_job(bad_scan) == 3);

  CHECK(execute_json_config("/nonexistent/posmap.json") == 2);
}

TEST_CASE("json output uses the [re, im] complex convention") {
  CHECK(complex_to_json(Complex(1.5, -2.0)) == Json::array({1.5, -2.0}));
  CHECK(complex_from_json(Json::array({1.5, -2.0})) == Complex(1.5, -2.0));
  CHECK(complex_from_json(Json(2.5)) == Complex(2.5, 0.0));

  const Mat phi = max_entangled_projector(2);
  const Json j = matrix_to_json(phi, 2, 2);
  const BipartiteState back = state_matrix_from_json(j);
  CHECK((back.rho - phi).cwiseAbs().maxCoeff() == 0.0);
  CHECK(back.dim_a == 2);
  CHECK(back.dim_b == 2);
}

TEST_CASE("inline matrix states are accepted by eval-state") {
  const Mat phi = max_entangled_projector(2);
  Json j;
  j["command"] = "eval-state";
  j["state"] = matrix_to_json(phi, 2, 2);
  j["map"] = Json{{"map", "reduction"}, {"k", 1.0}};
  j["detectors"] = Json::array({"t1", "p3ppt"});
  const fs::path out = temp_file("inline_state.json");
  j["output"] = Json{{"path", out.string()}};
  run(config_from_json(j));
  const Json result = Json::parse(slurp(out));
  CHECK(result.at("reports").at("p3ppt").at("scalars")
            .at("p2_sq_minus_p3_p1").get<double>() ==
        Catch::Approx(0.75).margin(1e-10));
  fs::remove(out);
}

TEST_CASE("side selector applies the map to the first subsystem") {
  // Probing side A must reproduce probing side B of the factor-swapped
  // state; a product of distinct factors makes the two sides differ.
  Mat factor_a = Mat::Zero(3, 3);
  factor_a(0, 0) = 1.0;
  Mat factor_b = Mat::Zero(3, 3);
  factor_b.diagonal() << 0.5, 0.3, 0.2;
  const Mat forward = kron(factor_a, factor_b);
  const Mat reversed = kron(factor_b, factor_a);

  auto run_eval = [&](Json state, const std::string& name) {
    const fs::path out = temp_file(name);
    Json j;
    j["command"] = "eval-state";
    j["state"] = std::move(state);
    j["map"] = Json{{"map", "gen_choi"}, {"kk", 1}};
    j["output"] = Json{{"path", out.string()}};
    run(config_from_json(j));
    const Json result = Json::parse(slurp(out));
    fs::remove(out);
    return result;
  };

  Json side_a_desc = matrix_to_json(forward, 3, 3);
  side_a_desc["side"] = "A";
  const Json side_a = run_eval(side_a_desc, "side_a.json");
  const Json side_b = run_eval(matrix_to_json(forward, 3, 3), "side_b.json");
  const Json reversed_b = run_eval(matrix_to_json(reversed, 3, 3), "side_rev.json");

  for (int n = 0; n < 5; ++n) {
    CHECK(side_a.at("s")[n].get<double>() ==
          Catch::Approx(reversed_b.at("s")[n].get<double>()).margin(1e-13));
  }
  CHECK(side_a.at("s")[1].get<double>() !=
        Catch::Approx(side_b.at("s")[1].get<double>()).epsilon(1e-9));

  Json bad_side{{"family", "tiles"}, {"side", "C"}};
  Json j{{"command", "eval-state"}, {"state", bad_side}};
  CHECK_THROWS_AS(run(config_from_json(j)), InvalidConfig);
}

TEST_CASE("seeded bounded-Schmidt states are reachable from configs") {
  const fs::path out = temp_file("sampled.json");
  Json j;
  j["command"] = "eval-state";
  j["state"] = Json{{"family", "schmidt_bounded"}, {"d", 3}, {"r", 2},
                    {"terms", 3}};
  j["map"] = Json{{"map", "reduction"}, {"k", 0.5}};
  j["seed"] = 4242;
  j["output"] = Json{{"path", out.string()}};
  run(config_from_json(j));
  const Json first = Json::parse(slurp(out));
  CHECK(first.at("reports").at("t1").at("verdict") == "not_detected");
  CHECK(first.at("reports").at("t2").at("verdict") == "not_detected");

  run(config_from_json(j));
  CHECK(Json::parse(slurp(out)) == first);

  j["seed"] = 4243;
  run(config_from_json(j));
  CHECK(Json::parse(slurp(out)) != first);
  fs::remove(out);
}

TEST_CASE("the installed binary handles flag-driven jobs") {
  const fs::path out = temp_file("binary_threshold.json");
  const std::string command =
      std::string(POSMAP_CLI_BINARY) +
      " thresholds --family isotropic --map reduction --r 2" +
      " --grid 0.5:0.75:0 --out " + out.string();
  const int status = std::system(command.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  const Json result = Json::parse(slurp(out));
  CHECK(result.at("onset").get<double>() == Catch::Approx(0.625).margin(1e-4));
  fs::remove(out);

  const int bad = std::system(
      (std::string(POSMAP_CLI_BINARY) + " eval-state 2>/dev/null").c_str());
  REQUIRE(WIFEXITED(bad));
  CHECK(WEXITSTATUS(bad) == 2);
}

TEST_CASE("the installed binary accepts a top-level job config") {
  const fs::path config_path = temp_file("job_config.json");
  const fs::path out = temp_file("config_run.json");
  Json j;
  j["command"] = "eval-state";
  j["state"] = Json{{"family", "max_entangled"}, {"d", 2}};
  j["detectors"] = Json::array({"p3ppt"});
  j["output"] = Json{{"path", out.string()}};
  {
    std::ofstream config(config_path);
    config << j.dump(2) << "\n";
  }
  const std::string command = std::string(POSMAP_CLI_BINARY) + " --config " +
                              config_path.string();
  const int status = std::system(command.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  const Json result = Json::parse(slurp(out));
  CHECK(result.at("reports").at("p3ppt").at("verdict") == "detected");
  fs::remove(config_path);
  fs::remove(out);
}
