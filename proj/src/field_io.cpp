#include "macorr/field_io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <json.hpp>

namespace macorr {
namespace {

using nlohmann::json;

void put_values(std::ostream& os, const std::vector<double>& v) {
  if constexpr (std::endian::native == std::endian::little) {
    os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
  } else {
    for (double x : v) {
      std::uint64_t bits;
      std::memcpy(&bits, &x, sizeof bits);
      char bytes[8];
      for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((bits >> (8 * b)) & 0xff);
      os.write(bytes, 8);
    }
  }
}

std::vector<double> get_values(std::istream& is, std::size_t count) {
  std::vector<double> v(count);
  if constexpr (std::endian::native == std::endian::little) {
    is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(count * sizeof(double)));
  } else {
    for (double& x : v) {
      unsigned char bytes[8];
      is.read(reinterpret_cast<char*>(bytes), 8);
      std::uint64_t bits = 0;
      for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
      std::memcpy(&x, &bits, sizeof bits);
    }
  }
  if (!is) throw ParameterError("truncated field file");
  return v;
}

void write_all(const std::filesystem::path& path, json header, const std::vector<const ScalarField*>& parts) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ParameterError("cannot open " + path.string() + " for writing");
  os << header.dump() << '\n';
  for (const ScalarField* f : parts) put_values(os, f->values());
}

struct Loaded {
  json header;
  Grid2 grid{8};
  std::vector<ScalarField> parts;
};

Loaded load(const std::filesystem::path& path, const std::string& expected) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParameterError("cannot open " + path.string());
  std::string line;
  std::getline(is, line);
  Loaded out;
  out.header = json::parse(line);
  if (out.header.at("type").get<std::string>() != expected) {
    throw ParameterError(path.string() + " holds a " + out.header.at("type").get<std::string>() + " field, expected " +
                         expected);
  }
  out.grid = Grid2(out.header.at("n").get<int>());
  for (std::size_t e = 0; e < out.header.at("entries").size(); ++e) {
    out.parts.emplace_back(out.grid, get_values(is, out.grid.size()));
  }
  return out;
}

}  // namespace

void write_field(const std::filesystem::path& path, const ScalarField& f) {
  write_all(path, {{"type", "scalar"}, {"n", f.n()}, {"entries", {"f"}}}, {&f});
}

void write_field(const std::filesystem::path& path, const VectorField2& f) {
  write_all(path, {{"type", "vector"}, {"n", f.grid().n()}, {"entries", {"1", "2"}}}, {&f.c1, &f.c2});
}

void write_field(const std::filesystem::path& path, const SymMatField2& f) {
  write_all(path, {{"type", "symmat"}, {"n", f.grid().n()}, {"entries", {"11", "12", "22"}}}, {&f.e11, &f.e12, &f.e22});
}

void write_field(const std::filesystem::path& path, const AffineVectorField& f) {
  json h = {{"type", "affine"},
            {"n", f.grid().n()},
            {"entries", {"1", "2"}},
            {"matrix", {f.M.m11, f.M.m12, f.M.m21, f.M.m22}},
            {"offset", {f.offset.x1, f.offset.x2}}};
  write_all(path, h, {&f.periodic.c1, &f.periodic.c2});
}

std::string field_type(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParameterError("cannot open " + path.string());
  std::string line;
  std::getline(is, line);
  return json::parse(line).at("type").get<std::string>();
}

ScalarField read_scalar(const std::filesystem::path& path) { return std::move(load(path, "scalar").parts.at(0)); }

VectorField2 read_vector(const std::filesystem::path& path) {
  Loaded l = load(path, "vector");
  return {std::move(l.parts.at(0)), std::move(l.parts.at(1))};
}

SymMatField2 read_symmat(const std::filesystem::path& path) {
  Loaded l = load(path, "symmat");
  return {std::move(l.parts.at(0)), std::move(l.parts.at(1)), std::move(l.parts.at(2))};
}

AffineVectorField read_affine(const std::filesystem::path& path) {
  Loaded l = load(path, "affine");
  const auto m = l.header.at("matrix").get<std::vector<double>>();
  const auto b = l.header.at("offset").get<std::vector<double>>();
  return AffineVectorField::raw(Mat2{m.at(0), m.at(1), m.at(2), m.at(3)}, Vec2{b.at(0), b.at(1)},
                                VectorField2(std::move(l.parts.at(0)), std::move(l.parts.at(1))));
}

void write_heatmap(const std::filesystem::path& path, const ScalarField& f) {
  const double lo = f.min();
  const double hi = f.max();
  const double span = hi > lo ? hi - lo : 1.0;
  const int n = f.n();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ParameterError("cannot open " + path.string() + " for writing");
  os << "P5\n" << n << ' ' << n << "\n255\n";
  std::vector<unsigned char> row(static_cast<std::size_t>(n));
  // Image rows run top to bottom along decreasing x2; columns follow x1.
  for (int j = n - 1; j >= 0; --j) {
    for (int i = 0; i < n; ++i) {
      const double t = (f(i, j) - lo) / span;
      row[static_cast<std::size_t>(i)] = static_cast<unsigned char>(std::clamp(std::lround(255.0 * t), 0L, 255L));
    }
    os.write(reinterpret_cast<const char*>(row.data()), n);
  }
}

}  // namespace macorr
