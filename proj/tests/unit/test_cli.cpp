#ifdef MOYAL_HAVE_CLI

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>

#include "commands.hpp"
#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/io.hpp"
#include "run_config.hpp"

using namespace moyal;
using namespace moyal::cli;
namespace fs = std::filesystem;

namespace {

RunConfig small_config(const char* name) {
  RunConfig c;
  c.output = fs::temp_directory_path() / "moyal_unit_cli" / name;
  fs::remove_all(c.output);
  c.grid = GridSpec{2, 32, 8.0, 1.0};
  return c;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("run configuration parsing") {
    const RunConfig def = parse_run_config(Json::object());
    CHECK(def.spacetime.dim() == 4);
    CHECK(def.seed == 20240611);
    CHECK_THROWS_AS(parse_run_config(Json{{"seeds", 1}}), FormatError);
    CHECK_THROWS_AS(parse_run_config(Json{{"grid", Json{{"n", 8}, {"size", 2}}}}), FormatError);
    CHECK_THROWS_AS(parse_run_config(Json{{"seed", "x"}}), FormatError);
    CHECK_THROWS_AS(parse_run_config(Json{{"tolerances", Json{{"a", "b"}}}}), FormatError);
    CHECK_THROWS_AS(parse_run_config(Json{{"spacetime", Json{{"dim", 3}, {"metric", {1, -1}}}}}), FormatError);

    const RunConfig c = parse_run_config(Json{{"spacetime", Json{{"dim", 2}}},
                                              {"sigma0", Json::parse("[[0, 2], [-2, 0]]")},
                                              {"tolerances", Json{{"oracle_relative_l2", 1e-5}}}});
    CHECK(c.tolerance("oracle_relative_l2", 1.0) == 1e-5);
    CHECK(c.tolerance("other", 0.5) == 0.5);
    CHECK(c.sigma_for(2).matrix()(0, 1) == 2.0);
    CHECK(c.sigma_for(4) == standard_skew(4));
    // round trip through the serializer
    CHECK(dump_json(to_json(parse_run_config(to_json(c)))) == dump_json(to_json(c)));
  }

  TEST_CASE("packet descriptors") {
    const auto p = packet_from_json(Json::parse(R"({"center": [0.5, -1], "width": 2, "amp": [0, 1]})"));
    CHECK(p.dim() == 2);
    CHECK(p.precision(0, 0) == doctest::Approx(0.25));
    CHECK(p.amp == oracle::Complex{0.0, 1.0});
    CHECK(p.freq.isZero());
    CHECK_THROWS(packet_from_json(Json::parse(R"({"width": 1})")));
    CHECK_THROWS(packet_from_json(Json::parse(R"({"center": [0], "colour": 1})")));
  }

  TEST_CASE("orbit and sweep outputs") {
    const RunConfig c = small_config("orbit");
    CHECK(cmd_orbit(c, 5) == kExitPass);
    const Json doc = Json::parse(read_text(c.output / "orbit.json"));
    CHECK(doc.at("records").size() == 5);
    CHECK(doc.at("passed").get<bool>());

    CHECK(cmd_sweep(c, {0.5, 0.25}) == kExitPass);
    const std::string csv = read_text(c.output / "sweep.csv");
    CHECK(csv.rfind("theta,d1,d2,slope_d1,slope_d2\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  }

  TEST_CASE("star on sampled descriptors") {
    const RunConfig c = small_config("star");
    const fs::path dir = c.output;
    fs::create_directories(dir);
    write_text(dir / "f.json", R"({"center": [0.2, 0], "width": 1})");
    write_text(dir / "g.json", R"({"center": [0, -0.3], "width": 1.2, "freq": [0.25, 0]})");
    CHECK(cmd_star(c, dir / "f.json", dir / "g.json", true) == kExitPass);
    const Json s = Json::parse(read_text(dir / "star.json"));
    CHECK(s.at("oracle_defect").get<double>() < 1e-6);
    CHECK_FALSE(s.contains("seconds"));
    CHECK(fs::exists(dir / "timing.json"));
    CHECK(read_grid(dir / "star.moya").values.spec().n == 32);

    CHECK(cmd_sample(c, dir / "f.json", "f") == kExitPass);
    RunConfig other = c;
    other.grid.n = 16;
    CHECK(cmd_sample(other, dir / "g.json", "g16") == kExitPass);
    CHECK_THROWS_AS(cmd_star(c, dir / "f.moya", dir / "g16.moya", false), FormatError);
  }

  TEST_CASE("verify rejects unknown suites") {
    const RunConfig c = small_config("verify");
    CHECK_THROWS_AS(cmd_verify(c, "nope"), std::invalid_argument);
  }
}

#endif
