#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "macorr/grid.hpp"

namespace macorr {

/// Real samples f(x1_i, x2_j) stored at values[i*n + j].
class ScalarField {
 public:
  explicit ScalarField(const Grid2& g);
  ScalarField(const Grid2& g, std::vector<double> values);
  ScalarField(const Grid2& g, std::vector<double> values, Band band);

  static ScalarField constant(const Grid2& g, double c);
  /// Samples f(x1, x2) on the grid; the band is unknown (full).
  static ScalarField sample(const Grid2& g, const std::function<double(double, double)>& f);

  const Grid2& grid() const { return grid_; }
  int n() const { return grid_.n(); }
  const std::vector<double>& values() const { return values_; }
  double operator()(int i, int j) const { return values_[static_cast<std::size_t>(i) * grid_.n() + j]; }
  Band band() const { return band_; }
  void set_band(Band b) { band_ = b; }

  double mean() const;
  double min() const;
  double max() const;
  bool all_finite() const;

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double c);
  ScalarField& operator+=(double c);

 private:
  Grid2 grid_;
  std::vector<double> values_;
  Band band_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a);
ScalarField operator*(double c, ScalarField a);
ScalarField operator*(ScalarField a, double c);
ScalarField operator/(ScalarField a, double c);
ScalarField operator+(ScalarField a, double c);
/// Dealiased pointwise product (see spectral.hpp for the truncation policy).
ScalarField operator*(const ScalarField& a, const ScalarField& b);

struct VectorField2 {
  ScalarField c1;
  ScalarField c2;

  explicit VectorField2(const Grid2& g) : c1(g), c2(g) {}
  VectorField2(ScalarField a, ScalarField b);

  const Grid2& grid() const { return c1.grid(); }
  /// Component k ∈ {1,2}.
  const ScalarField& operator[](int k) const;
  ScalarField& operator[](int k);

  VectorField2& operator+=(const VectorField2& o);
  VectorField2& operator-=(const VectorField2& o);
};

VectorField2 operator+(VectorField2 a, const VectorField2& b);
VectorField2 operator-(VectorField2 a, const VectorField2& b);
VectorField2 operator*(double c, VectorField2 a);
/// Scalar field times vector field, componentwise dealiased.
VectorField2 operator*(const ScalarField& f, const VectorField2& a);
/// e_k scaled by f.
VectorField2 along(const ScalarField& f, int k);

struct SymMatField2 {
  ScalarField e11;
  ScalarField e12;
  ScalarField e22;

  explicit SymMatField2(const Grid2& g) : e11(g), e12(g), e22(g) {}
  SymMatField2(ScalarField a11, ScalarField a12, ScalarField a22);

  static SymMatField2 scaled_identity(const ScalarField& f);
  /// f·e_i⊗e_i.
  static SymMatField2 rank_one(const ScalarField& f, int i);
  const Grid2& grid() const { return e11.grid(); }
  /// Entry (r, c), both in {1,2}.
  const ScalarField& entry(int r, int c) const;

  SymMatField2& operator+=(const SymMatField2& o);
  SymMatField2& operator-=(const SymMatField2& o);
};

SymMatField2 operator+(SymMatField2 a, const SymMatField2& b);
SymMatField2 operator-(SymMatField2 a, const SymMatField2& b);
SymMatField2 operator-(SymMatField2 a);
SymMatField2 operator*(double c, SymMatField2 a);
SymMatField2 operator*(const ScalarField& f, const SymMatField2& a);

struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

struct Mat2 {
  double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;
  static Mat2 identity(double c = 1.0) { return {c, 0.0, 0.0, c}; }
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator*(double c, const Mat2& a);

/// w(x) = M x + offset + periodic(x), periodic part kept mean-free.
struct AffineVectorField {
  Mat2 M;
  Vec2 offset;
  VectorField2 periodic;

  explicit AffineVectorField(const Grid2& g) : periodic(g) {}
  AffineVectorField(Mat2 m, Vec2 b, VectorField2 p);
  /// Moves the means of p into the offset.
  static AffineVectorField from_periodic(VectorField2 p);
  /// Takes the parts verbatim, without re-centering p.
  static AffineVectorField raw(Mat2 m, Vec2 b, VectorField2 p);

  const Grid2& grid() const { return periodic.grid(); }
  /// Full value of component k at grid node (i, j), x taken in the fundamental cell.
  double value(int k, int i, int j) const;

  AffineVectorField& operator+=(const AffineVectorField& o);
  AffineVectorField& operator+=(const VectorField2& p);
  AffineVectorField& operator-=(const AffineVectorField& o);
};

AffineVectorField operator+(AffineVectorField a, const AffineVectorField& b);
AffineVectorField operator-(AffineVectorField a, const AffineVectorField& b);
AffineVectorField operator*(double c, AffineVectorField a);

}  // namespace macorr
