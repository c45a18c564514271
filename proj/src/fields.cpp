#include "macorr/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace macorr {

ScalarField::ScalarField(const Grid2& g) : grid_(g), values_(g.size(), 0.0), band_{0, 0} {}

ScalarField::ScalarField(const Grid2& g, std::vector<double> values)
    : ScalarField(g, std::move(values), Band::full(g)) {}

ScalarField::ScalarField(const Grid2& g, std::vector<double> values, Band band)
    : grid_(g), values_(std::move(values)), band_(band) {
  if (values_.size() != g.size()) throw ParameterError("field value count does not match grid");
}

ScalarField ScalarField::constant(const Grid2& g, double c) {
  return ScalarField(g, std::vector<double>(g.size(), c), Band{0, 0});
}

ScalarField ScalarField::sample(const Grid2& g, const std::function<double(double, double)>& f) {
  std::vector<double> v(g.size());
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    const double x1 = g.coord(i);
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = f(x1, g.coord(j));
  }
  return ScalarField(g, std::move(v));
}

double ScalarField::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

double ScalarField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double ScalarField::max() const { return *std::max_element(values_.begin(), values_.end()); }

bool ScalarField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return std::isfinite(x); });
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  band_ = join(band_, o.band_);
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  band_ = join(band_, o.band_);
  return *this;
}

ScalarField& ScalarField::operator*=(double c) {
  for (double& x : values_) x *= c;
  if (c == 0.0) band_ = {0, 0};
  return *this;
}

ScalarField& ScalarField::operator+=(double c) {
  for (double& x : values_) x += c;
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator-(ScalarField a) { return a *= -1.0; }
ScalarField operator*(double c, ScalarField a) { return a *= c; }
ScalarField operator*(ScalarField a, double c) { return a *= c; }
ScalarField operator/(ScalarField a, double c) { return a *= 1.0 / c; }
ScalarField operator+(ScalarField a, double c) { return a += c; }

VectorField2::VectorField2(ScalarField a, ScalarField b) : c1(std::move(a)), c2(std::move(b)) {
  require_same_grid(c1.grid(), c2.grid());
}

const ScalarField& VectorField2::operator[](int k) const {
  if (k == 1) return c1;
  if (k == 2) return c2;
  throw ParameterError("vector component must be 1 or 2");
}

ScalarField& VectorField2::operator[](int k) {
  if (k == 1) return c1;
  if (k == 2) return c2;
  throw ParameterError("vector component must be 1 or 2");
}

VectorField2& VectorField2::operator+=(const VectorField2& o) {
  c1 += o.c1;
  c2 += o.c2;
  return *this;
}

VectorField2& VectorField2::operator-=(const VectorField2& o) {
  c1 -= o.c1;
  c2 -= o.c2;
  return *this;
}

VectorField2 operator+(VectorField2 a, const VectorField2& b) { return a += b; }
VectorField2 operator-(VectorField2 a, const VectorField2& b) { return a -= b; }
VectorField2 operator*(double c, VectorField2 a) {
  a.c1 *= c;
  a.c2 *= c;
  return a;
}
VectorField2 operator*(const ScalarField& f, const VectorField2& a) { return {f * a.c1, f * a.c2}; }

VectorField2 along(const ScalarField& f, int k) {
  VectorField2 out(f.grid());
  out[k] = f;
  return out;
}

SymMatField2::SymMatField2(ScalarField a11, ScalarField a12, ScalarField a22)
    : e11(std::move(a11)), e12(std::move(a12)), e22(std::move(a22)) {
  require_same_grid(e11.grid(), e12.grid());
  require_same_grid(e11.grid(), e22.grid());
}

SymMatField2 SymMatField2::scaled_identity(const ScalarField& f) { return {f, ScalarField(f.grid()), f}; }

SymMatField2 SymMatField2::rank_one(const ScalarField& f, int i) {
  SymMatField2 out(f.grid());
  if (i == 1) {
    out.e11 = f;
  } else if (i == 2) {
    out.e22 = f;
  } else {
    throw ParameterError("axis must be 1 or 2");
  }
  return out;
}

const ScalarField& SymMatField2::entry(int r, int c) const {
  if (r == 1 && c == 1) return e11;
  if (r == 2 && c == 2) return e22;
  if ((r == 1 && c == 2) || (r == 2 && c == 1)) return e12;
  throw ParameterError("matrix entry index out of range");
}

SymMatField2& SymMatField2::operator+=(const SymMatField2& o) {
  e11 += o.e11;
  e12 += o.e12;
  e22 += o.e22;
  return *this;
}

SymMatField2& SymMatField2::operator-=(const SymMatField2& o) {
  e11 -= o.e11;
  e12 -= o.e12;
  e22 -= o.e22;
  return *this;
}

SymMatField2 operator+(SymMatField2 a, const SymMatField2& b) { return a += b; }
SymMatField2 operator-(SymMatField2 a, const SymMatField2& b) { return a -= b; }
SymMatField2 operator-(SymMatField2 a) { return -1.0 * std::move(a); }
SymMatField2 operator*(double c, SymMatField2 a) {
  a.e11 *= c;
  a.e12 *= c;
  a.e22 *= c;
  return a;
}
SymMatField2 operator*(const ScalarField& f, const SymMatField2& a) { return {f * a.e11, f * a.e12, f * a.e22}; }

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}
Mat2 operator*(double c, const Mat2& a) { return {c * a.m11, c * a.m12, c * a.m21, c * a.m22}; }

AffineVectorField::AffineVectorField(Mat2 m, Vec2 b, VectorField2 p)
    : M(m), offset(b), periodic(std::move(p)) {
  const double m1 = periodic.c1.mean();
  const double m2 = periodic.c2.mean();
  if (m1 != 0.0 || m2 != 0.0) {
    periodic.c1 += -m1;
    periodic.c2 += -m2;
    offset.x1 += m1;
    offset.x2 += m2;
  }
}

AffineVectorField AffineVectorField::from_periodic(VectorField2 p) { return {Mat2{}, Vec2{}, std::move(p)}; }

AffineVectorField AffineVectorField::raw(Mat2 m, Vec2 b, VectorField2 p) {
  AffineVectorField w(p.grid());
  w.M = m;
  w.offset = b;
  w.periodic = std::move(p);
  return w;
}

double AffineVectorField::value(int k, int i, int j) const {
  const double x1 = grid().coord(i);
  const double x2 = grid().coord(j);
  if (k == 1) return M.m11 * x1 + M.m12 * x2 + offset.x1 + periodic.c1(i, j);
  return M.m21 * x1 + M.m22 * x2 + offset.x2 + periodic.c2(i, j);
}

AffineVectorField& AffineVectorField::operator+=(const AffineVectorField& o) {
  M = M + o.M;
  offset.x1 += o.offset.x1;
  offset.x2 += o.offset.x2;
  periodic += o.periodic;
  return *this;
}

AffineVectorField& AffineVectorField::operator+=(const VectorField2& p) {
  return *this += from_periodic(p);
}

AffineVectorField& AffineVectorField::operator-=(const AffineVectorField& o) { return *this += -1.0 * o; }

AffineVectorField operator+(AffineVectorField a, const AffineVectorField& b) { return a += b; }
AffineVectorField operator-(AffineVectorField a, const AffineVectorField& b) { return a -= b; }
AffineVectorField operator*(double c, AffineVectorField a) {
  a.M = c * a.M;
  a.offset = {c * a.offset.x1, c * a.offset.x2};
  a.periodic = c * std::move(a.periodic);
  return a;
}

}  // namespace macorr
