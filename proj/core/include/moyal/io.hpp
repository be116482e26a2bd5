#pragma once

// On-disk formats.
//
// .moya grid: 16-byte header
//   bytes 0-3  "MOYA"
//   byte  4    version (1)
//   byte  5    dim
//   bytes 6-7  N, u16 little-endian
//   bytes 8-11 L, f32 little-endian
//   bytes 12-15 zero
// then N^d complex values as little-endian float64 (re, im) pairs, row-major.
//
// The JSON sidecar next to a grid (same path with ".json" appended) carries
// the full-precision spec, theta and optionally sigma. Matrices are row-major
// arrays of arrays.

#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include "json.hpp"
#include "moyal/covariance.hpp"
#include "moyal/geometry.hpp"
#include "moyal/grid.hpp"
#include "moyal/weyl_algebra.hpp"

namespace moyal {

using Json = nlohmann::json;

inline constexpr std::uint8_t kMoyaVersion = 1;

/// Throws FormatError unless j is an object whose keys all appear in allowed.
void reject_unknown(const Json& j, const std::set<std::string>& allowed, const char* what);

Json matrix_to_json(const Mat& m);
/// Throws FormatError unless j is a rectangular array of arrays of numbers.
Mat matrix_from_json(const Json& j);

Json to_json(const SkewForm& sigma);
SkewForm skew_from_json(const Json& j);
Json to_json(const LorentzTransform& t);
LorentzTransform lorentz_from_json(const Json& j, const Spacetime& st);
Json to_json(const GridSpec& spec);
/// Unknown keys are rejected.
GridSpec grid_spec_from_json(const Json& j);
Json to_json(const WeylElement& a);
WeylElement weyl_from_json(const Json& j);

/// Raw .moya encoding; L is stored as f32 in the header.
std::vector<std::uint8_t> encode_moya(const GridFunction& f);
/// Decodes a .moya buffer. The decoded GridSpec has L equal to the f32 header value and theta is
/// 1 unless `exact` is given, in which case the header must agree with it.
GridFunction decode_moya(const std::vector<std::uint8_t>& bytes,
                         const std::optional<GridSpec>& exact = std::nullopt);

struct GridFile {
  GridFunction values;
  std::optional<SkewForm> sigma;
};

std::filesystem::path sidecar_path(const std::filesystem::path& grid);

/// Writes the grid and its sidecar.
void write_grid(const std::filesystem::path& path, const GridFunction& f,
                const std::optional<SkewForm>& sigma = std::nullopt);
/// Reads a grid, using the sidecar when present. Throws FormatError on a
/// malformed file or a header that contradicts the sidecar.
GridFile read_grid(const std::filesystem::path& path);

/// Directory with transforms.json and fiber_<k>.moya files.
void write_bundle(const std::filesystem::path& dir, const FiberedFunction& f);
FiberedFunction read_bundle(const std::filesystem::path& dir, const Spacetime& st);

/// Serialized bytes of j with sorted keys and fixed float formatting.
std::string dump_json(const Json& j);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace moyal
