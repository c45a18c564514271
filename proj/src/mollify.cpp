#include "macorr/mollify.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace macorr {
namespace {

void require_scale(double l) {
  if (!(l > 0.0 && l < std::numbers::pi)) {
    std::ostringstream msg;
    msg << "mollification scale must lie in (0, pi), got " << l;
    throw ParameterError(msg.str());
  }
}

}  // namespace

std::vector<double> mollifier_kernel(const Grid2& g, double l) {
  require_scale(l);
  const int n = g.n();
  const double h = g.spacing();
  std::vector<double> k(g.size(), 0.0);
  const int reach = static_cast<int>(std::ceil(l / h));
  for (int di = -reach; di <= reach; ++di) {
    for (int dj = -reach; dj <= reach; ++dj) {
      const double r2 = (di * h * di * h + dj * h * dj * h) / (l * l);
      if (r2 >= 1.0) continue;
      const int i = (di + n) % n;
      const int j = (dj + n) % n;
      k[static_cast<std::size_t>(i) * n + j] = std::exp(-1.0 / (1.0 - r2));
    }
  }
  const long double mass = std::accumulate(k.begin(), k.end(), 0.0L);
  for (double& x : k) x = static_cast<double>(x / mass);
  return k;
}

Mollifier::Mollifier(const Grid2& g, double l) : grid_(g), l_(l) {
  const Spectrum s = forward(ScalarField(g, mollifier_kernel(g, l)));
  const double scale = static_cast<double>(g.size());
  symbol_.resize(s.coeffs().size());
  for (std::size_t k = 0; k < symbol_.size(); ++k) symbol_[k] = s.coeffs()[k].real() * scale;
}

ScalarField Mollifier::operator()(const ScalarField& f) const {
  require_same_grid(grid_, f.grid());
  Spectrum s = forward(f);
  for (std::size_t k = 0; k < symbol_.size(); ++k) s.coeffs()[k] *= symbol_[k];
  return inverse(s, f.band());
}

VectorField2 Mollifier::operator()(const VectorField2& f) const { return {(*this)(f.c1), (*this)(f.c2)}; }

SymMatField2 Mollifier::operator()(const SymMatField2& f) const {
  return {(*this)(f.e11), (*this)(f.e12), (*this)(f.e22)};
}

AffineVectorField Mollifier::operator()(const AffineVectorField& f) const {
  return {f.M, f.offset, (*this)(f.periodic)};
}

ScalarField mollify(const ScalarField& f, double l) { return Mollifier(f.grid(), l)(f); }
VectorField2 mollify(const VectorField2& f, double l) { return Mollifier(f.grid(), l)(f); }
SymMatField2 mollify(const SymMatField2& f, double l) { return Mollifier(f.grid(), l)(f); }
AffineVectorField mollify(const AffineVectorField& f, double l) { return Mollifier(f.grid(), l)(f); }

ScalarField commutator(const ScalarField& f, const ScalarField& g, double l) {
  const Mollifier phi(f.grid(), l);
  return phi(f * g) - phi(f) * phi(g);
}

}  // namespace macorr
