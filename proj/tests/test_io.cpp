#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "focksim/io.hpp"

using namespace focksim;
namespace fs = std::filesystem;

namespace {

const char* kDecayText =
    "name=decay5\n"
    "model=lindblad-decay\n"
    "levels=5\n"
    "dim=6\n"
    "gamma=1\n"
    "t_final=3\n"
    "dt=0.001\n";

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("parse a decay scenario with defaults") {
  const Scenario s = parse_scenario(kDecayText);
  CHECK(s.name == "decay5");
  CHECK(s.model == Model::LindbladDecay);
  CHECK(s.levels == 5);
  CHECK(s.dim == 6);
  CHECK(s.gamma == 1.0);
  CHECK(s.t_final == 3.0);
  CHECK(s.dt == 0.001);
  CHECK(s.initial_level == 5);  // defaulted to levels
  CHECK(s.copies == 1);
  CHECK(s.sample_every == 1);
}

TEST_CASE("dim defaults to levels+1 for decay models only") {
  const Scenario s = parse_scenario(
      "name=d\nmodel=rate-decay\nlevels=3\ngamma=0.5\nt_final=1\ndt=0.01\n");
  CHECK(s.dim == 4);

  CHECK_THROWS_AS(
      parse_scenario("name=q\nmodel=unitary-quench\nlevels=1\n"
                     "omega_initial=1\nomega_final=2\nt_final=1\ndt=0.01\n"),
      ParseError);
}

TEST_CASE("comments, blank lines and spacing are tolerated") {
  const Scenario s = parse_scenario(
      "# a comment line\n"
      "  name = spaced   # trailing comment\n"
      "\n"
      "model=lindblad-decay\n"
      "levels = 2\n"
      "gamma=1\n"
      "t_final=1\n"
      "dt = 0.001\n");
  CHECK(s.name == "spaced");
  CHECK(s.levels == 2);
}

TEST_CASE("parse failures name the offence") {
  CHECK_THROWS_WITH_AS(parse_scenario("model=warp-drive\n"),
                       doctest::Contains("unknown model"), ParseError);
  CHECK_THROWS_WITH_AS(parse_scenario("warp=9\n"),
                       doctest::Contains("unknown key 'warp'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_scenario("\n\nwarp=9\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_scenario("name=x\nmodel=lindblad-decay\nlevels=two\n"),
      doctest::Contains("levels"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_scenario("name=x\nmodel=lindblad-decay\nlevels=2\nt_final=1\n"
                     "dt=0.001\n"),
      doctest::Contains("gamma"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_scenario("name=x\nname=y\nmodel=lindblad-decay\nlevels=2\n"
                     "gamma=1\nt_final=1\ndt=0.001\n"),
      doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_AS(parse_scenario("name=x\njust a line\n"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_scenario("name=x\nmodel=unitary-quench\nlevels=0\ndim=16\n"
                     "omega_final=2\nt_final=1\ndt=0.01\n"),
      doctest::Contains("omega_initial"), ParseError);
}

TEST_CASE("scenario invariant violations are configuration errors") {
  CHECK_THROWS_AS(
      parse_scenario("name=x\nmodel=lindblad-decay\nlevels=5\ndim=4\n"
                     "gamma=1\nt_final=3\ndt=0.001\n"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_scenario("name=x\nmodel=lindblad-decay\nlevels=5\ndim=6\n"
                     "gamma=1000\nt_final=3\ndt=0.001\n"),
      ConfigError);
}

TEST_CASE("render/parse round-trip on random scenarios") {
  std::mt19937 gen(31415);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  std::uniform_int_distribution<int> levels_dist(0, 7);
  std::uniform_int_distribution<int> extra_dim(1, 20);
  std::uniform_int_distribution<int> model_dist(0, 3);
  std::uniform_int_distribution<long> copies_dist(1, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    Scenario s;
    s.model = static_cast<Model>(model_dist(gen));
    s.name = "roundtrip-" + std::to_string(trial);
    s.levels = levels_dist(gen);
    s.dim = s.levels + extra_dim(gen);
    s.gamma = unit(gen);
    s.omega_initial = unit(gen);
    s.omega_final = unit(gen);
    s.ramp_time = 10.0 * unit(gen);
    s.t_final = 1.0 + unit(gen);
    s.dt = 0.01 * unit(gen);
    s.initial_level = std::uniform_int_distribution<int>(0, s.levels)(gen);
    s.copies = copies_dist(gen);
    s.sample_every = copies_dist(gen);
    s.validate();
    CHECK(parse_scenario(render_scenario(s)) == s);
  }
}

TEST_CASE("scenario file i/o") {
  const fs::path path = temp_file("focksim_io_test_scenario.txt");
  {
    std::ofstream out(path);
    out << kDecayText;
  }
  CHECK(parse_scenario_file(path).name == "decay5");
  fs::remove(path);
  CHECK_THROWS_AS(parse_scenario_file(path), IoError);
}

TEST_CASE("csv format") {
  Trajectory traj;
  traj.samples.push_back({0.0, 5.0, std::log(5.5), 1.0, std::log(5.5), 0.0, 0.0});
  traj.samples.push_back({0.5, 3.0321, 1.25, 0.8, 1.26, 0.1, 1e-12});
  traj.samples.push_back({1.0, 1.8394, 1.01, 0.7, 1.02, 0.2, 2e-12});

  const std::string text = format_trajectory_csv(traj, 1);
  CHECK(text.substr(0, text.find('\n')) ==
        "t,n_expect,entropy,purity,jensen_bound,vn_entropy,trace_error");
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find("1.70474809223843") != std::string::npos);  // 15 digits
  CHECK(text.find('\r') == std::string::npos);

  SUBCASE("thinning keeps every k-th row") {
    const std::string thinned = format_trajectory_csv(traj, 2);
    CHECK(std::count(thinned.begin(), thinned.end(), '\n') == 3);
    CHECK(thinned.find("0.5,") == std::string::npos);
  }
  SUBCASE("identical input formats identically") {
    CHECK(format_trajectory_csv(traj, 1) == text);
  }
}

TEST_CASE("csv writes read back to the printed precision") {
  Trajectory traj;
  std::mt19937 gen(777);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 64; ++i)
    traj.samples.push_back({0.1 * i, std::exp(dist(gen)), dist(gen),
                            std::abs(dist(gen)), dist(gen), std::abs(dist(gen)),
                            std::abs(dist(gen)) * 1e-12});

  const fs::path path = temp_file("focksim_io_test_traj.csv");
  write_trajectory_csv(traj, path, 1);
  const auto samples = read_trajectory_csv(path);
  REQUIRE(samples.size() == traj.samples.size());

  Trajectory reparsed;
  reparsed.samples = samples;
  CHECK(format_trajectory_csv(reparsed, 1) == format_trajectory_csv(traj, 1));
  fs::remove(path);

  CHECK_THROWS_AS(read_trajectory_csv(path), IoError);
}

TEST_CASE("csv reader rejects malformed files") {
  const fs::path path = temp_file("focksim_io_test_bad.csv");
  {
    std::ofstream out(path);
    out << "time,stuff\n1,2\n";
  }
  CHECK_THROWS_AS(read_trajectory_csv(path), ParseError);
  {
    std::ofstream out(path);
    out << kCsvHeader << "\n1,2,3\n";
  }
  CHECK_THROWS_AS(read_trajectory_csv(path), ParseError);
  fs::remove(path);
}
