#include "macorr/calculus.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "macorr/norms.hpp"

namespace macorr {
namespace {

Complex ik_power(int k1, int k2, int t, int s) {
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kIPow[(t + s) % 4] * (std::pow(static_cast<double>(k1), t) * std::pow(static_cast<double>(k2), s));
}

/// out += coef · (ik1)^t (ik2)^s · in over the band of in.
void accumulate_derivative(const Spectrum& in, Band band, int t, int s, double coef, Spectrum& out) {
  const int n = in.grid().n();
  for (int r = 0; r < in.rows(); ++r) {
    const int k1 = in.k1(r);
    if (std::abs(k1) > band.k1) continue;
    for (int c = 0; c <= band.k2 && c < in.cols(); ++c) {
      if ((t % 2 == 1 && std::abs(k1) == n / 2) || (s % 2 == 1 && c == n / 2)) continue;
      out.at(r, c) += coef * ik_power(k1, c, t, s) * in.at(r, c);
    }
  }
}

Spectrum resolved_spectrum(const ScalarField& f, Band& band) {
  if (is_resolved(f)) {
    band = f.band();
    return forward(f);
  }
  ScalarField r = resolve(f);
  band = r.band();
  return forward(r);
}

}  // namespace

ScalarField derivative(const ScalarField& f, int t, int s) {
  if (t == 0 && s == 0) return resolve(f);
  return DerivativeCache(f)(t, s);
}

DerivativeCache::DerivativeCache(const ScalarField& f) : spectrum_(f.grid()), band_{0, 0} {
  spectrum_ = resolved_spectrum(f, band_);
}

ScalarField DerivativeCache::operator()(int t, int s) const {
  if (t < 0 || s < 0) throw ParameterError("derivative orders must be non-negative");
  Spectrum out(spectrum_.grid());
  accumulate_derivative(spectrum_, band_, t, s, 1.0, out);
  return inverse(out, band_);
}

VectorField2 gradient(const ScalarField& f) {
  DerivativeCache d(f);
  return {d(1, 0), d(0, 1)};
}

SymMatField2 hessian(const ScalarField& f) {
  DerivativeCache d(f);
  return {d(2, 0), d(1, 1), d(0, 2)};
}

SymMatField2 sym_grad(const VectorField2& p) {
  Band b1{0, 0};
  Band b2{0, 0};
  const Spectrum s1 = resolved_spectrum(p.c1, b1);
  const Spectrum s2 = resolved_spectrum(p.c2, b2);
  const Grid2& g = p.grid();
  Spectrum e11(g);
  Spectrum e12(g);
  Spectrum e22(g);
  accumulate_derivative(s1, b1, 1, 0, 1.0, e11);
  accumulate_derivative(s1, b1, 0, 1, 0.5, e12);
  accumulate_derivative(s2, b2, 1, 0, 0.5, e12);
  accumulate_derivative(s2, b2, 0, 1, 1.0, e22);
  return {inverse(e11, b1), inverse(e12, join(b1, b2)), inverse(e22, b2)};
}

SymMatField2 sym_grad(const AffineVectorField& w) {
  SymMatField2 out = sym_grad(w.periodic);
  out.e11 += w.M.m11;
  out.e12 += 0.5 * (w.M.m12 + w.M.m21);
  out.e22 += w.M.m22;
  return out;
}

SymMatField2 metric_pullback(const VectorField2& v) {
  const VectorField2 g1 = gradient(v.c1);
  const VectorField2 g2 = gradient(v.c2);
  return {g1.c1 * g1.c1 + g2.c1 * g2.c1, g1.c1 * g1.c2 + g2.c1 * g2.c2, g1.c2 * g1.c2 + g2.c2 * g2.c2};
}

SymMatField2 outer(const VectorField2& p) { return {p.c1 * p.c1, p.c1 * p.c2, p.c2 * p.c2}; }

ScalarField curl_curl(const SymMatField2& A) {
  Band b11{0, 0};
  Band b12{0, 0};
  Band b22{0, 0};
  const Spectrum s11 = resolved_spectrum(A.e11, b11);
  const Spectrum s12 = resolved_spectrum(A.e12, b12);
  const Spectrum s22 = resolved_spectrum(A.e22, b22);
  Spectrum out(A.grid());
  accumulate_derivative(s11, b11, 0, 2, 1.0, out);
  accumulate_derivative(s12, b12, 1, 1, -2.0, out);
  accumulate_derivative(s22, b22, 2, 0, 1.0, out);
  return inverse(out, join(join(b11, b12), b22));
}

SymMatField2 defect(const VectorField2& v, const AffineVectorField& w, const SymMatField2& A) {
  require_same_grid(v.grid(), A.grid());
  require_same_grid(w.grid(), A.grid());
  return A - 0.5 * metric_pullback(v) - sym_grad(w);
}

ScalarField poisson_solve(const ScalarField& f) {
  const double m = f.mean();
  if (std::abs(m) > 1e-12 * (1.0 + sup_norm(f))) {
    std::ostringstream msg;
    msg << "right-hand side must have zero mean on the torus; mean = " << m;
    throw ParameterError(msg.str());
  }
  Band band{0, 0};
  Spectrum s = resolved_spectrum(f, band);
  for (int r = 0; r < s.rows(); ++r) {
    const double k1 = s.k1(r);
    for (int c = 0; c < s.cols(); ++c) {
      const double k2sq = k1 * k1 + static_cast<double>(c) * c;
      s.at(r, c) = k2sq == 0.0 ? Complex(0.0, 0.0) : s.at(r, c) / k2sq;
    }
  }
  return inverse(s, band);
}

double integrate(const ScalarField& f) {
  return f.mean() * 4.0 * std::numbers::pi * std::numbers::pi;
}

}  // namespace macorr
