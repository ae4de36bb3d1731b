#include <doctest.h>

#include <filesystem>
#include <unistd.h>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "madlab/field_io.hpp"
#include "madlab/random_fields.hpp"

using namespace madlab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() /
           ("madlab-io-" + std::to_string(::getpid()));
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("field_io") {

TEST_CASE("scalar fields round trip bit exactly") {
  GridSpec g(32, kTwoPi);
  FieldSampler rng(67);
  auto f = rng.scalar(g, 0.7);
  f.v[0] = 1.0 / 3.0;
  f.v[1] = std::numbers::pi;
  f.v[2] = 1e-300;

  std::stringstream ss;
  write_scalar_csv(ss, f, "rho");
  auto back = read_scalar_csv(ss);
  CHECK(back.grid == g);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(back.v[i] == f.v[i]);
}

TEST_CASE("complex and vector fields round trip on 2D grids") {
  GridSpec g(16, 12, kTwoPi, 3.0);
  FieldSampler rng(71);
  auto c = rng.complex_field(g, 0.5);
  std::stringstream sc;
  write_complex_csv(sc, c, "psi");
  auto cb = read_complex_csv(sc);
  CHECK(cb.grid == g);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(cb.v[i] == c.v[i]);

  auto v = rng.vector(g, 0.5);
  std::stringstream sv;
  write_vector_csv(sv, v, "mu");
  auto vb = read_vector_csv(sv);
  CHECK(vb.grid == g);
  for (std::size_t i = 0; i < v.v.size(); ++i) CHECK(vb.v[i] == v.v[i]);
}

TEST_CASE("the header carries the grid") {
  GridSpec g(16, kTwoPi);
  ScalarField f(g, 1.0);
  std::stringstream ss;
  write_scalar_csv(ss, f);
  std::string first;
  std::getline(ss, first);
  CHECK(first.rfind("# grid dim=1 n0=16", 0) == 0);
}

TEST_CASE("series tables round trip") {
  std::vector<double> times = {0.0, 0.1, 0.2};
  std::vector<std::string> names = {"energy", "mass"};
  std::vector<std::vector<double>> series = {{1.0, 1.0 / 3.0, 1e-17},
                                             {2.0, 2.0, 2.0}};
  std::stringstream ss;
  write_series_csv(ss, times, names, series);
  auto table = read_series_csv(ss);
  CHECK(table.times == times);
  CHECK(table.names == names);
  CHECK(table.series == series);
}

TEST_CASE("path helpers write and load files") {
  auto dir = temp_dir();
  GridSpec g(16, 16, kTwoPi, kTwoPi);
  FieldSampler rng(73);
  auto c = rng.complex_field(g, 0.4);
  auto path = (dir / "psi.csv").string();
  save_complex_csv(path, c, "psi");
  auto back = load_complex_csv(path);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(back.v[i] == c.v[i]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("missing and corrupt files are reported") {
  CHECK_THROWS_AS(load_scalar_csv("/nonexistent/rho.csv"), std::runtime_error);
  std::stringstream truncated("# grid dim=1 n0=16 l0=6.28\nx,value\n0,1.5\n");
  CHECK_THROWS_AS(read_scalar_csv(truncated), std::runtime_error);
  std::stringstream garbage("not a field file\n");
  CHECK_THROWS_AS(read_scalar_csv(garbage), std::runtime_error);
}

}  // TEST_SUITE
