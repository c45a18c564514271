#include "macorr/decompose.hpp"

#include "macorr/calculus.hpp"
#include "macorr/norms.hpp"

namespace macorr {

Decomposition diagonal_decompose(const SymMatField2& H) {
  const Grid2& g = H.grid();
  const ScalarField h11 = resolve(H.e11);
  const ScalarField h12 = resolve(H.e12);
  const ScalarField h22 = resolve(H.e22);
  const Band band = join(join(h11.band(), h12.band()), h22.band());
  const Spectrum s11 = forward(h11);
  const Spectrum s12 = forward(h12);
  const Spectrum s22 = forward(h22);
  Spectrum sa(g);
  Spectrum sp1(g);
  Spectrum sp2(g);
  const Complex minus_i(0.0, -1.0);
  for (int r = 0; r < sa.rows(); ++r) {
    const double k1 = sa.k1(r);
    for (int c = 0; c < sa.cols(); ++c) {
      if (r == 0 && c == 0) continue;
      const double k2 = c;
      const double q = k1 * k1 + k2 * k2;
      const Complex a11 = s11.at(r, c);
      const Complex a12 = s12.at(r, c);
      const Complex a22 = s22.at(r, c);
      sa.at(r, c) = (k2 * k2 * a11 - 2.0 * k1 * k2 * a12 + k1 * k1 * a22) / q;
      sp1.at(r, c) = minus_i * (k1 * (a22 - a11) - 2.0 * k2 * a12) / q;
      sp2.at(r, c) = minus_i * (k2 * (a11 - a22) - 2.0 * k1 * a12) / q;
    }
  }
  const double m11 = s11.at(0, 0).real();
  const double m12 = s12.at(0, 0).real();
  const double m22 = s22.at(0, 0).real();
  const double a0 = 0.5 * (m11 + m22);
  sa.at(0, 0) = a0;
  const Mat2 M{a0 - m11, -m12, -m12, a0 - m22};
  return {AffineVectorField(M, Vec2{}, VectorField2(inverse(sp1, band), inverse(sp2, band))), inverse(sa, band)};
}

double decomposition_residual(const SymMatField2& H, const Decomposition& d) {
  const SymMatField2 r = H + sym_grad(d.psi) - SymMatField2::scaled_identity(d.a);
  const double scale = sup_norm(H);
  return scale > 0.0 ? sup_norm(r) / scale : sup_norm(r);
}

}  // namespace macorr
