#include <cstring>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "moyal/errors.hpp"
#include "moyal/io.hpp"

using namespace moyal;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const char* name) {
  const fs::path dir = fs::temp_directory_path() / "moyal_unit_io" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

GridFunction sample_data(const GridSpec& spec) {
  return GridFunction::sample(spec, [](std::span<const double> x) {
    return Complex{x[0] * 0.25, -x[1]} + test::turns(0.1 * x[0]);
  });
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE(".moya header layout") {
    const GridSpec spec{2, 8, 2.5, 1.0};
    const auto bytes = encode_moya(sample_data(spec));
    REQUIRE(bytes.size() == 16 + 64 * 16);
    CHECK(std::memcmp(bytes.data(), "MOYA", 4) == 0);
    CHECK(bytes[4] == 1);
    CHECK(bytes[5] == 2);
    CHECK(bytes[6] == 8);
    CHECK(bytes[7] == 0);
    float l = 0.0f;
    std::memcpy(&l, bytes.data() + 8, 4);
    CHECK(l == 2.5f);
    for (int i = 12; i < 16; ++i) CHECK(bytes[static_cast<std::size_t>(i)] == 0);
    // first value: x = (-1.25, -1.25)
    double re = 0.0;
    std::memcpy(&re, bytes.data() + 16, 8);
    CHECK(re == doctest::Approx(-0.3125 + std::cos(2.0 * std::numbers::pi * -0.125)));
  }

  TEST_CASE("round trip and malformed buffers") {
    const GridSpec spec{2, 8, 3.0, 0.5};
    const GridFunction f = sample_data(spec);
    const auto bytes = encode_moya(f);
    const GridFunction back = decode_moya(bytes, spec);
    CHECK(back.spec() == spec);
    CHECK(max_abs(back - f) == 0.0);
    CHECK(decode_moya(bytes).spec().theta == 1.0);

    auto truncated = bytes;
    truncated.pop_back();
    CHECK_THROWS_AS(decode_moya(truncated), FormatError);
    auto magic = bytes;
    magic[0] = 'X';
    CHECK_THROWS_AS(decode_moya(magic), FormatError);
    auto version = bytes;
    version[4] = 2;
    CHECK_THROWS_AS(decode_moya(version), FormatError);
    CHECK_THROWS_AS(decode_moya(bytes, GridSpec{2, 8, 3.5, 0.5}), FormatError);
    CHECK_THROWS_AS(decode_moya({}), FormatError);
  }

  TEST_CASE("grid files with sidecars") {
    const fs::path dir = scratch_dir("grid");
    const GridSpec spec{2, 8, 0.1, 2.0};  // 0.1 is not an f32
    const GridFunction f = sample_data(spec);
    const SkewForm sigma = standard_skew(2).scaled(-1.5);
    write_grid(dir / "f.moya", f, sigma);
    CHECK(fs::exists(sidecar_path(dir / "f.moya")));
    const GridFile back = read_grid(dir / "f.moya");
    CHECK(back.values.spec() == spec);
    REQUIRE(back.sigma.has_value());
    CHECK(*back.sigma == sigma);

    // a sidecar describing another grid is a contradiction
    Json side = Json::parse(read_text(sidecar_path(dir / "f.moya")));
    side["grid"]["n"] = 16;
    write_text(sidecar_path(dir / "f.moya"), side.dump());
    CHECK_THROWS_AS(read_grid(dir / "f.moya"), FormatError);

    // without a sidecar the header alone decides
    fs::remove(sidecar_path(dir / "f.moya"));
    CHECK(read_grid(dir / "f.moya").values.spec().n == 8);
  }

  TEST_CASE("JSON codecs") {
    CHECK_THROWS_AS(grid_spec_from_json(Json{{"dim", 2}, {"n", 8}, {"length", 4.0}, {"extra", 1}}), FormatError);
    const GridSpec spec = grid_spec_from_json(to_json(GridSpec{2, 16, 4.0, 0.25}));
    CHECK(spec == GridSpec{2, 16, 4.0, 0.25});
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2], [3]]")), FormatError);
    CHECK_THROWS_AS(skew_from_json(Json::parse("[[0, 1], [1, 0]]")), FormatError);
    CHECK(skew_from_json(to_json(standard_skew(4))) == standard_skew(4));

    const SkewForm sigma = standard_skew(2);
    WeylElement a(sigma);
    a.add_term(CovectorKey::from(Covector{0.5, -0.25}), Complex{1.0, 2.0});
    a.add_term(CovectorKey::from(Covector{0.0, 0.0}), Complex{-0.5, 0.0});
    const WeylElement b = weyl_from_json(to_json(a));
    CHECK((a - b).max_abs() == 0.0);
    CHECK(dump_json(to_json(a)) == dump_json(to_json(b)));
  }

  TEST_CASE("dump_json sorts keys") {
    CHECK(dump_json(Json{{"b", 1}, {"a", 2}}).find("\"a\"") < dump_json(Json{{"b", 1}, {"a", 2}}).find("\"b\""));
  }

  TEST_CASE("fibered bundles") {
    const fs::path dir = scratch_dir("bundle");
    const Spacetime st;
    const GroupSample e({make_boost(st, 1, 0.3), parity(st)});
    const GridSpec spec{4, 8, 4.0, 1.0};
    const FiberedFunction f(e, {sample_data(spec), sample_data(spec) * Complex{0.0, 1.0}});
    write_bundle(dir, f);
    const FiberedFunction back = read_bundle(dir, st);
    CHECK(back.size() == 2);
    CHECK(max_defect(back, f) == 0.0);
    CHECK((back.sample()[0].matrix() - e[0].matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
}
