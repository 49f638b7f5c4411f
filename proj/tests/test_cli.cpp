#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dicke/cli.hpp"

using dicke::cli::run;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    result.push_back(line);
  }
  return result;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string c; std::getline(in, c, ',');) result.push_back(c);
  return result;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dicke_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("alpha specifications") {
  const auto range = dicke::cli::parse_alpha_spec("0:2:0.05");
  REQUIRE(range.size() == 41);
  CHECK(range[3] == 0.15);
  CHECK(range.back() == 2.0);
  CHECK(dicke::cli::parse_alpha_spec("0:1:0.3") == std::vector<double>{0.0, 0.3, 0.6, 0.9});
  CHECK(dicke::cli::parse_alpha_spec("1") == std::vector<double>{1.0});
  CHECK(dicke::cli::parse_alpha_spec(" 0.5, 2 ") == std::vector<double>{0.5, 2.0});
  CHECK_THROWS_AS(dicke::cli::parse_alpha_spec("1:0:0.1"), std::invalid_argument);
  CHECK_THROWS_AS(dicke::cli::parse_alpha_spec("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(dicke::cli::parse_alpha_spec("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(dicke::cli::parse_alpha_spec("a"), std::invalid_argument);
}

TEST_CASE("N lists") {
  CHECK(dicke::cli::parse_n_list("2^4,8") == std::vector<int>{16, 8});
  CHECK(dicke::cli::parse_n_range("3:5") == std::vector<int>{8, 16, 32});
  CHECK_THROWS_AS(dicke::cli::parse_n_list("0"), std::invalid_argument);
  CHECK_THROWS_AS(dicke::cli::parse_n_list("-3"), std::invalid_argument);
  CHECK_THROWS_AS(dicke::cli::parse_n_list("4.5"), std::invalid_argument);
  CHECK_THROWS_AS(dicke::cli::parse_n_list("2^31"), std::invalid_argument);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"sweep", "--d", "10", "--alpha", "1", "--n", "0"}).code == 2);
  CHECK(call({"sweep", "--alpha", "-1", "--n", "4"}).code == 2);
  CHECK(call({"sweep", "--d", "0", "--n", "4"}).code == 2);
  CHECK(call({"sweep", "--tol", "0", "--n", "4"}).code == 2);
  CHECK(call({"sweep", "--n", "4", "--n-range", "2:6"}).code == 2);
  CHECK(call({"sweep", "--n", "4", "--q-max", "10"}).code == 2);
  CHECK(call({"sweep", "--n", "4", "--q-max", "10", "--points", "200"}).code == 2);
  CHECK(call({"sweep", "--n", "4", "--omega", "1"}).code == 2);
  CHECK(call({"sweep", "--n", "4", "--alpha", "1", "--omega", "1", "--delta", "5", "--coupling", "1"}).code == 2);
  CHECK(call({"solve", "--alpha", "0.5,1"}).code == 2);
  CHECK(call({"sweep", "--workers", "0"}).code == 2);
  CHECK(call({"scaling-fit", "--fit", "energy"}).code == 2);
  CHECK(call({"scaling-fit", "--n", "4,8,16"}).code == 2);
  const Run r = call({"sweep", "--n", "0"});
  CHECK(r.err.find("N must be >= 1") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  const Run r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep") != std::string::npos);
  CHECK(call({"sweep", "--help"}).code == 0);
}

TEST_CASE("sweep CSV layout and ordering") {
  const Run r = call({"sweep", "--alpha", "1.5,0.5", "--n", "16,4"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] ==
        "alpha,n_qubits,d_ratio,e0_reduced,e0_per_nd,sx_per_n,sx2_per_n2,sy2_per_n2,sz2_per_n2,q2,p2,order_param,"
        "tau1,tau_n,phi_m1,phi_mhalf,phi_phalf,converged");
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"4", "5.0000000000000000e-01"}, {"4", "1.5000000000000000e+00"},
      {"16", "5.0000000000000000e-01"}, {"16", "1.5000000000000000e+00"}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto c = cells(ls[i + 1]);
    REQUIRE(c.size() == 18);
    CHECK(c[1] == expected[i].first);
    CHECK(c[0] == expected[i].second);
    CHECK(c[17] == "1");
  }
  CHECK(r.out.find("\r\n") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs and worker counts") {
  const std::vector<std::string> base = {"sweep", "--alpha", "0:2:0.5", "--n", "4,64,256"};
  auto with = [&](std::string workers) {
    auto args = base;
    args.push_back("--workers");
    args.push_back(workers);
    return call(args);
  };
  const Run a = call(base), b = call(base), one = with("1"), three = with("3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == one.out);
  CHECK(a.out == three.out);
}

TEST_CASE("worker count from the environment") {
  setenv("DICKE_WORKERS", "2", 1);
  const Run ok = call({"sweep", "--alpha", "1", "--n", "4"});
  setenv("DICKE_WORKERS", "many", 1);
  const Run bad = call({"sweep", "--alpha", "1", "--n", "4"});
  unsetenv("DICKE_WORKERS");
  CHECK(ok.code == 0);
  CHECK(bad.code == 2);
}

TEST_CASE("non-convergence gives exit 1 and a flagged row") {
  const Run r = call({"sweep", "--alpha", "1", "--n", "4", "--q-max", "1", "--points", "201"});
  CHECK(r.code == 1);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(cells(ls[1]).back() == "0");
}

TEST_CASE("quartic constants") {
  const Run r = call({"quartic", "--tol", "1e-8"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "beta0,beta0_error,beta1,beta1_error,k_const,k_error,beta1_slope");
  const auto c = cells(ls[1]);
  CHECK(std::stod(c[0]) == doctest::Approx(1.06036).epsilon(1e-4));
  CHECK(std::stod(c[2]) == doctest::Approx(0.36203).epsilon(1e-4));
  CHECK(std::stod(c[4]) == doctest::Approx(0.46).epsilon(0.005 / 0.46));
}

TEST_CASE("thermodynamic limit table") {
  const Run r = call({"limit", "--alpha", "0.5,2", "--d", "10"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "alpha,d_ratio,phase,sx_per_n,sx2_per_n2,sy2_per_n2,sz2_per_n2,order_param,e0_per_n,tau_infinity");
  const auto c = cells(ls[2]);
  CHECK(c[2] == "superradiant");
  CHECK(std::stod(c[3]) == -0.5);
  CHECK(std::stod(c[8]) == -12.5);
}

TEST_CASE("physical units are reduced at the boundary") {
  // omega = 1, delta = 5, lambda = 1: D = 10, alpha = 2 lambda^2 / (omega delta) = 0.4
  const Run phys = call({"solve", "--omega", "1", "--delta", "5", "--coupling", "1", "--n", "16"});
  const Run dimless = call({"solve", "--alpha", "0.4", "--d", "10", "--n", "16"});
  REQUIRE(phys.code == 0);
  const auto a = cells(lines(phys.out)[1]), b = cells(lines(dimless.out)[1]);
  CHECK(std::stod(a[0]) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(std::stod(a[2]) == 10.0);
  CHECK(std::stod(a[5]) == doctest::Approx(std::stod(b[5])).epsilon(1e-12));
}

TEST_CASE("entanglement table") {
  const Run r = call({"entanglement", "--alpha", "0,2", "--n", "8"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "alpha,n_qubits,d_ratio,tau1,tau_n,purity,eta,quadrature_error,tau_infinity,converged");
  CHECK(std::abs(std::stod(cells(ls[1])[4])) < 1e-10);
  CHECK(std::stod(cells(ls[2])[4]) > 0.1);
}

TEST_CASE("scaling fit defaults and files") {
  const auto out = temp_file("fit.csv"), summary = temp_file("fit.json"), points = temp_file("points.csv");
  const Run r = call({"scaling-fit", "--out", out.string(), "--summary", summary.string(), "--points-out",
                      points.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::stringstream text;
  text << f.rdbuf();
  const auto ls = lines(text.str());
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "observable,transform,alpha,d_ratio,exponent,prefactor,r_squared,n_min,n_max,points");
  CHECK(cells(ls[1])[0] == "sx_per_n");
  CHECK(std::stod(cells(ls[1])[4]) == doctest::Approx(-2.0 / 3.0).epsilon(0.03));
  CHECK(std::stod(cells(ls[2])[4]) == doctest::Approx(-4.0 / 3.0).epsilon(0.015));
  CHECK(cells(ls[1])[7] == "64");
  CHECK(cells(ls[1])[8] == "65536");

  std::ifstream js(summary);
  const auto j = nlohmann::json::parse(js);
  CHECK(j["command"] == "scaling-fit");
  CHECK(j["non_converged"].empty());
  CHECK(j["fits"].size() == 2);

  std::ifstream pf(points);
  std::stringstream ptext;
  ptext << pf.rdbuf();
  CHECK(lines(ptext.str()).size() == 12);
  std::filesystem::remove(out);
  std::filesystem::remove(summary);
  std::filesystem::remove(points);
}

TEST_CASE("solve writes the wavefunction on request") {
  const auto wf = temp_file("wf.csv");
  const Run r = call({"solve", "--alpha", "2", "--n", "32", "--wavefunction", wf.string()});
  REQUIRE(r.code == 0);
  std::ifstream f(wf);
  std::string header;
  std::getline(f, header);
  CHECK(header == "q,phi\r");
  double norm = 0.0, prev_q = 0.0, h = 0.0;
  int rows = 0;
  for (std::string line; std::getline(f, line);) {
    const auto c = cells(line);
    const double q = std::stod(c[0]), phi = std::stod(c[1]);
    if (rows > 0) h = q - prev_q;
    prev_q = q;
    norm += phi * phi;
    ++rows;
  }
  CHECK(rows >= 201);
  CHECK(norm * h == doctest::Approx(1.0).epsilon(1e-9));
  std::filesystem::remove(wf);
}

}  // TEST_SUITE
