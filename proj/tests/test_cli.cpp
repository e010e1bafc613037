#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "linres/cli.hpp"

using namespace linres;
using namespace linres::testing;
using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
  json payload;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult result;
  result.code = run_cli(args, out, err);
  result.out = out.str();
  result.err = err.str();
  if (!result.out.empty() && (result.out.front() == '{' || result.out.front() == '['))
    result.payload = json::parse(result.out);
  return result;
}

}  // namespace

TEST_CASE("check reports verdict and witnesses") {
  const CliResult good = cli({"check", "--ideal", "x^3, x^2y, xy^2, y^3, x^2z, y^2z"});
  CHECK(good.code == 0);
  CHECK(good.payload["linear_resolution"] == true);
  CHECK(good.payload["linearly_presented"] == true);
  CHECK(good.payload["witness"].is_null());

  const CliResult pinched =
      cli({"check", "--ideal", "x^3,x^2y,xy^2,y^3,x^2z,y^2z,xz^2,yz^2,z^3", "--exit-status"});
  CHECK(pinched.code == 1);
  CHECK(pinched.payload["linear_resolution"] == false);
  CHECK(pinched.payload["linearly_presented"] == true);
  CHECK(pinched.payload["witness"]["type"] == "bad_configuration");
  CHECK(pinched.payload["witness"]["inducer"] == "xyz");

  const CliResult split = cli({"check", "--ideal", "x^3, z^3"});
  CHECK(split.code == 0);  // without --exit-status the verdict stays informational
  CHECK(split.payload["witness"]["type"] == "disconnected_pair");
}

TEST_CASE("order emits the tree sequence and colon trace") {
  const CliResult cubes = cli({"order", "--ideal",
                               "x^3, x^2y, xy^2, y^3, x^2z, xyz, y^2z, xz^2, yz^2, z^3"});
  CHECK(cubes.code == 0);
  const std::vector<std::string> expected{"x^3", "x^2y", "xy^2", "y^3", "x^2z",
                                          "xyz", "y^2z", "xz^2", "yz^2", "z^3"};
  CHECK(cubes.payload["order"].get<std::vector<std::string>>() == expected);
  CHECK(cubes.payload["has_linear_quotients"] == true);
  CHECK(cubes.payload["colon_trace"].size() == 9);
  for (const auto& step : cubes.payload["colon_trace"]) CHECK(step["linear"] == true);

  const CliResult refused = cli({"order", "--ideal", "x^3, z^3"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("not linearly presented") != std::string::npos);

  // Linearly presented without linear quotients: the order exists but the
  // colon check fails and names the offending colon generator.
  const CliResult pinched = cli({"order", "--ideal",
                                 "x^3,x^2y,xy^2,y^3,x^2z,y^2z,xz^2,yz^2,z^3", "--exit-status"});
  CHECK(pinched.code == 1);
  CHECK(pinched.payload["has_linear_quotients"] == false);
  CHECK(pinched.payload.contains("failing_index"));
  CHECK(pinched.payload.contains("offending_generator"));
}

TEST_CASE("betti tables over several characteristics") {
  const CliResult single = cli({"betti", "--ideal", "x^2, xy, xz, y^2, yz, z^2"});
  CHECK(single.code == 0);
  CHECK(single.payload["subject"] == "I");
  CHECK(single.payload["characteristic"] == 0);
  CHECK(single.payload["regularity"] == 2);
  CHECK(single.payload["projective_dimension"] == 2);

  int b1 = 0;
  for (const auto& cell : single.payload["graded"])
    if (cell["i"] == 1) b1 += cell["rank"].get<int>();
  CHECK(b1 == 8);

  const CliResult multi = cli({"betti", "--ideal", "x^2, xy", "--char", "0", "--char", "2"});
  CHECK(multi.code == 0);
  REQUIRE(multi.payload.is_array());
  CHECK(multi.payload.size() == 2);
  CHECK(multi.payload[1]["characteristic"] == 2);
}

TEST_CASE("socle and power subcommands") {
  const CliResult socle =
      cli({"socle", "--ideal", "x^3,x^2y,xy^2,y^3,x^2z,y^2z,xz^2,yz^2,z^3"});
  CHECK(socle.code == 0);
  CHECK(socle.payload["socle"].get<std::vector<std::string>>() ==
        std::vector<std::string>{"x^2", "y^2", "z^2", "xyz"});
  CHECK(socle.payload["degrees"].get<std::vector<int>>() == std::vector<int>{2, 2, 2, 3});

  const CliResult squared = cli({"power", "--ideal", "x, y", "--powers", "2"});
  CHECK(squared.code == 0);
  CHECK(squared.payload["generators"].get<std::vector<std::string>>() ==
        std::vector<std::string>{"x^2", "xy", "y^2"});
  CHECK(squared.payload["degree"] == 2);
}

TEST_CASE("render subcommand") {
  const CliResult svg = cli({"render", "--ideal", "x^2, xy, xz, y^2, yz, z^2", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);

  const CliResult dot = cli({"render", "--ideal", "x^2, xy", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph", 0) == 0);

  const CliResult bad = cli({"render", "--ideal", "x^2, xy", "--format", "png"});
  CHECK(bad.code == 2);
}

TEST_CASE("sweep subcommand") {
  const CliResult sweep =
      cli({"sweep", "--degree", "1", "--powers", "2", "--char", "0", "--char", "2"});
  CHECK(sweep.code == 0);
  CHECK(sweep.payload["population"] == 7);
  CHECK(sweep.payload["mismatch_count"] == 0);
  CHECK(sweep.payload["counts"]["linear_resolution"] == 7);
  CHECK(sweep.payload["enumeration"]["mode"] == "exhaustive");
  CHECK(sweep.err.find("sweep:") != std::string::npos);  // timing goes to stderr

  const CliResult a = cli({"sweep", "--degree", "3", "--mode", "sample", "--samples", "20",
                           "--seed", "7", "--powers", "1", "--char", "0"});
  const CliResult b = cli({"sweep", "--degree", "3", "--mode", "sample", "--samples", "20",
                           "--seed", "7", "--powers", "1", "--char", "0", "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // byte-identical stdout for equal seeds
}

TEST_CASE("reisner subcommand") {
  const CliResult reisner = cli({"reisner", "--char", "0", "--char", "2"});
  CHECK(reisner.code == 0);
  CHECK(reisner.payload["num_vars"] == 6);
  CHECK(reisner.payload["generators"].size() == 10);
  REQUIRE(reisner.payload["results"].size() == 2);
  CHECK(reisner.payload["results"][0]["regularity"] == 3);
  CHECK(reisner.payload["results"][1]["regularity"] == 4);
}

TEST_CASE("ideal argument may name a file") {
  const std::string path = "cli_test_ideal.txt";
  {
    std::ofstream file(path);
    file << "x^3\nx^2y\nxy^2\ny^3\nx^2z\ny^2z\n";
  }
  const CliResult from_file = cli({"check", "--ideal", path});
  CHECK(from_file.code == 0);
  CHECK(from_file.payload["linear_resolution"] == true);
  CHECK(from_file.payload["generators"].size() == 6);
  std::remove(path.c_str());
}

TEST_CASE("warnings go to stderr") {
  const CliResult warned = cli({"socle", "--ideal", "x, x^2, y, z"});
  CHECK(warned.code == 0);
  CHECK(warned.err.find("warning") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"check", "--ideal", "x^0"}).code == 2);
  CHECK(cli({"check", "--ideal", "totally not a monomial"}).code == 2);
  CHECK(cli({"betti", "--ideal", "x^2", "--char", "4"}).code == 2);
  CHECK(cli({"sweep", "--degree", "5"}).code == 2);  // exhaustive above 4 needs the override
  CHECK(cli({}).code == 2);
}

TEST_CASE("pretty printing") {
  const CliResult pretty = cli({"check", "--ideal", "x^2, xy", "--pretty"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find('\n') != std::string::npos);
  CHECK(pretty.out.find("  \"") != std::string::npos);
}
