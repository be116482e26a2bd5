#include "moyal/io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <set>

#include "moyal/errors.hpp"

namespace moyal {

namespace fs = std::filesystem;

namespace {

template <typename U>
void put_le(std::vector<std::uint8_t>& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

template <typename U>
U get_le(const std::vector<std::uint8_t>& in, std::size_t at) {
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(static_cast<U>(in[at + i]) << (8 * i));
  return v;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string("expected a number for ") + what);
  return j.get<double>();
}

}  // namespace

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) throw FormatError(std::string(what) + ": unknown key '" + key + "'");
  }
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a nonempty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw FormatError("matrix rows must be nonempty arrays");
  Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError("matrix is not rectangular");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = number(j[r][c], "matrix entry");
    }
  }
  return m;
}

Json to_json(const SkewForm& sigma) { return matrix_to_json(sigma.matrix()); }

SkewForm skew_from_json(const Json& j) {
  try {
    return SkewForm(matrix_from_json(j));
  } catch (const InvariantError& e) {
    throw FormatError(std::string("sigma: ") + e.what());
  }
}

Json to_json(const LorentzTransform& t) { return matrix_to_json(t.matrix()); }

LorentzTransform lorentz_from_json(const Json& j, const Spacetime& st) {
  try {
    return LorentzTransform(st, matrix_from_json(j));
  } catch (const InvariantError& e) {
    throw FormatError(std::string("transform: ") + e.what());
  }
}

Json to_json(const GridSpec& spec) {
  return Json{{"dim", spec.dim}, {"n", spec.n}, {"length", spec.length}, {"theta", spec.theta}};
}

GridSpec grid_spec_from_json(const Json& j) {
  reject_unknown(j, {"dim", "n", "length", "theta"}, "grid");
  GridSpec s;
  if (j.contains("dim")) s.dim = j.at("dim").get<int>();
  if (j.contains("n")) s.n = j.at("n").get<int>();
  if (j.contains("length")) s.length = number(j.at("length"), "grid.length");
  if (j.contains("theta")) s.theta = number(j.at("theta"), "grid.theta");
  try {
    s.validate();
  } catch (const InvariantError& e) {
    throw FormatError(std::string("grid: ") + e.what());
  }
  return s;
}

Json to_json(const WeylElement& a) {
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms()) {
    Json alpha = Json::array();
    const Covector cv = key.covector();
    for (Eigen::Index i = 0; i < cv.coords.size(); ++i) alpha.push_back(cv.coords(i));
    terms.push_back(Json{{"alpha", alpha}, {"re", c.real()}, {"im", c.imag()}});
  }
  return Json{{"sigma", to_json(a.sigma())}, {"terms", terms}};
}

WeylElement weyl_from_json(const Json& j) {
  reject_unknown(j, {"sigma", "terms"}, "weyl element");
  WeylElement a(skew_from_json(j.at("sigma")));
  if (!j.at("terms").is_array()) throw FormatError("weyl element terms must be an array");
  for (const auto& t : j.at("terms")) {
    reject_unknown(t, {"alpha", "re", "im"}, "weyl term");
    const auto& al = t.at("alpha");
    if (!al.is_array() || static_cast<int>(al.size()) != a.dim()) throw FormatError("weyl term alpha has wrong length");
    Vec v(a.dim());
    for (int i = 0; i < a.dim(); ++i) v(i) = number(al[static_cast<std::size_t>(i)], "alpha entry");
    a.add_term(CovectorKey::from(Covector(v)), Complex{number(t.at("re"), "re"), number(t.at("im"), "im")});
  }
  return a;
}

std::vector<std::uint8_t> encode_moya(const GridFunction& f) {
  const GridSpec& s = f.spec();
  if (s.dim > 255 || s.n > 65535) throw FormatError("grid too large for the .moya header");
  std::vector<std::uint8_t> out;
  out.reserve(16 + 16 * f.size());
  for (char c : {'M', 'O', 'Y', 'A'}) out.push_back(static_cast<std::uint8_t>(c));
  out.push_back(kMoyaVersion);
  out.push_back(static_cast<std::uint8_t>(s.dim));
  put_le(out, static_cast<std::uint16_t>(s.n));
  put_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(s.length)));
  put_le(out, std::uint32_t{0});
  for (const auto& v : f.values()) {
    put_le(out, std::bit_cast<std::uint64_t>(v.real()));
    put_le(out, std::bit_cast<std::uint64_t>(v.imag()));
  }
  return out;
}

GridFunction decode_moya(const std::vector<std::uint8_t>& bytes, const std::optional<GridSpec>& exact) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), "MOYA", 4) != 0) throw FormatError("not a .moya grid");
  if (bytes[4] != kMoyaVersion) throw FormatError("unsupported .moya version " + std::to_string(bytes[4]));
  GridSpec s;
  s.dim = bytes[5];
  s.n = get_le<std::uint16_t>(bytes, 6);
  const float header_length = std::bit_cast<float>(get_le<std::uint32_t>(bytes, 8));
  s.length = header_length;
  s.theta = 1.0;
  if (exact) {
    if (exact->dim != s.dim || exact->n != s.n || static_cast<float>(exact->length) != header_length) {
      throw FormatError(".moya header disagrees with its sidecar");
    }
    s = *exact;
  }
  try {
    s.validate();
  } catch (const InvariantError& e) {
    throw FormatError(std::string(".moya header: ") + e.what());
  }
  if (bytes.size() != 16 + 16 * s.size()) throw FormatError(".moya payload size does not match the header");
  std::vector<Complex> values(s.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double re = std::bit_cast<double>(get_le<std::uint64_t>(bytes, 16 + 16 * i));
    const double im = std::bit_cast<double>(get_le<std::uint64_t>(bytes, 24 + 16 * i));
    values[i] = Complex{re, im};
  }
  try {
    return GridFunction(s, std::move(values));
  } catch (const InvariantError& e) {
    throw FormatError(std::string(".moya payload: ") + e.what());
  }
}

fs::path sidecar_path(const fs::path& grid) { return fs::path(grid.string() + ".json"); }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_grid(const fs::path& path, const GridFunction& f, const std::optional<SkewForm>& sigma) {
  const auto bytes = encode_moya(f);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed: " + path.string());
  Json side{{"grid", to_json(f.spec())}, {"theta", f.spec().theta}};
  if (sigma) side["sigma"] = to_json(*sigma);
  write_text(sidecar_path(path), dump_json(side));
}

GridFile read_grid(const fs::path& path) {
  const std::string raw = read_text(path);
  const std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
  const fs::path side = sidecar_path(path);
  if (!fs::exists(side)) return {decode_moya(bytes), std::nullopt};
  Json j;
  try {
    j = Json::parse(read_text(side));
  } catch (const Json::exception& e) {
    throw FormatError("sidecar " + side.string() + ": " + e.what());
  }
  reject_unknown(j, {"grid", "theta", "sigma"}, "grid sidecar");
  GridSpec spec = grid_spec_from_json(j.at("grid"));
  if (j.contains("theta")) spec.theta = number(j.at("theta"), "theta");
  GridFile out{decode_moya(bytes, spec), std::nullopt};
  if (j.contains("sigma")) {
    out.sigma = skew_from_json(j.at("sigma"));
    if (out.sigma->dim() != spec.dim) throw FormatError("sidecar sigma dimension differs from grid");
  }
  return out;
}

void write_bundle(const fs::path& dir, const FiberedFunction& f) {
  fs::create_directories(dir);
  Json ts = Json::array();
  for (const auto& t : f.sample().transforms()) ts.push_back(to_json(t));
  Json meta{{"transforms", ts}, {"bounded", f.sample().bounded()}};
  if (f.sample().bound()) meta["bound"] = *f.sample().bound();
  write_text(dir / "transforms.json", dump_json(meta));
  for (std::size_t k = 0; k < f.size(); ++k) {
    write_grid(dir / ("fiber_" + std::to_string(k) + ".moya"), f.fiber(k));
  }
}

FiberedFunction read_bundle(const fs::path& dir, const Spacetime& st) {
  Json meta;
  try {
    meta = Json::parse(read_text(dir / "transforms.json"));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("transforms.json: ") + e.what());
  }
  reject_unknown(meta, {"transforms", "bounded", "bound"}, "transforms.json");
  std::vector<LorentzTransform> ts;
  for (const auto& m : meta.at("transforms")) ts.push_back(lorentz_from_json(m, st));
  std::optional<double> bound;
  if (meta.value("bounded", false)) {
    if (!meta.contains("bound")) throw FormatError("bounded sample without a bound");
    bound = number(meta.at("bound"), "bound");
  }
  std::vector<GridFunction> fibers;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    fibers.push_back(read_grid(dir / ("fiber_" + std::to_string(k) + ".moya")).values);
  }
  return FiberedFunction(GroupSample(std::move(ts), bound), std::move(fibers));
}

}  // namespace moyal
