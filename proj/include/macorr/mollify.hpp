#pragma once

#include <vector>

#include "macorr/spectral.hpp"

namespace macorr {

/// Radial bump exp(−1/(1−|x/l|²)) sampled at min-image offsets and normalized to unit sum.
std::vector<double> mollifier_kernel(const Grid2& g, double l);

/// Circular convolution with the sampled bump at scale l, 0 < l < π.
class Mollifier {
 public:
  Mollifier(const Grid2& g, double l);
  double scale() const { return l_; }
  /// Real Fourier multiplier of the kernel at (k1, k2).
  double multiplier(int r, int c) const { return symbol_[static_cast<std::size_t>(r) * (grid_.n() / 2 + 1) + c]; }

  ScalarField operator()(const ScalarField& f) const;
  VectorField2 operator()(const VectorField2& f) const;
  SymMatField2 operator()(const SymMatField2& f) const;
  /// Affine parts are preserved by the symmetric unit-mass kernel.
  AffineVectorField operator()(const AffineVectorField& f) const;

 private:
  Grid2 grid_;
  double l_;
  std::vector<double> symbol_;
};

ScalarField mollify(const ScalarField& f, double l);
VectorField2 mollify(const VectorField2& f, double l);
SymMatField2 mollify(const SymMatField2& f, double l);
AffineVectorField mollify(const AffineVectorField& f, double l);

/// (fg)∗φ_l − (f∗φ_l)(g∗φ_l).
ScalarField commutator(const ScalarField& f, const ScalarField& g, double l);

}  // namespace macorr
