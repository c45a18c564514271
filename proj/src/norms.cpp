#include "macorr/norms.hpp"

#include <algorithm>
#include <cmath>

#include "macorr/calculus.hpp"

namespace macorr {

double sup_norm(const ScalarField& f) {
  double m = 0.0;
  for (double x : f.values()) m = std::max(m, std::abs(x));
  return m;
}

double sup_norm(const VectorField2& f) {
  const auto& a = f.c1.values();
  const auto& b = f.c2.values();
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, a[k] * a[k] + b[k] * b[k]);
  return std::sqrt(m);
}

double sup_norm(const SymMatField2& f) {
  const auto& a = f.e11.values();
  const auto& b = f.e12.values();
  const auto& c = f.e22.values();
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, a[k] * a[k] + 2.0 * b[k] * b[k] + c[k] * c[k]);
  return std::sqrt(m);
}

double sup_norm(const AffineVectorField& f) {
  const int n = f.grid().n();
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a = f.value(1, i, j);
      const double b = f.value(2, i, j);
      m = std::max(m, a * a + b * b);
    }
  }
  return std::sqrt(m);
}

double cm_norm(const ScalarField& f, int m) {
  if (m < 0 || m > 4) throw ParameterError("cm_norm order must lie in [0, 4]");
  double out = sup_norm(f);
  if (m == 0) return out;
  DerivativeCache d(f);
  for (int order = 1; order <= m; ++order) {
    for (int t = 0; t <= order; ++t) out = std::max(out, sup_norm(d(t, order - t)));
  }
  return out;
}

double cm_norm(const VectorField2& f, int m) { return std::max(cm_norm(f.c1, m), cm_norm(f.c2, m)); }

double cm_norm(const SymMatField2& f, int m) {
  return std::max({cm_norm(f.e11, m), cm_norm(f.e12, m), cm_norm(f.e22, m)});
}

namespace {

double jacobian_sup(const VectorField2& p, const Mat2& M) {
  const VectorField2 g1 = gradient(p.c1);
  const VectorField2 g2 = gradient(p.c2);
  double m = 0.0;
  const std::size_t count = p.grid().size();
  for (std::size_t k = 0; k < count; ++k) {
    const double a = g1.c1.values()[k] + M.m11;
    const double b = g1.c2.values()[k] + M.m12;
    const double c = g2.c1.values()[k] + M.m21;
    const double d = g2.c2.values()[k] + M.m22;
    m = std::max(m, a * a + b * b + c * c + d * d);
  }
  return std::sqrt(m);
}

double hessian_sup_periodic(const VectorField2& p) {
  const SymMatField2 h1 = hessian(p.c1);
  const SymMatField2 h2 = hessian(p.c2);
  double m = 0.0;
  const std::size_t count = p.grid().size();
  for (std::size_t k = 0; k < count; ++k) {
    double s = 0.0;
    for (const SymMatField2* h : {&h1, &h2}) {
      const double a = h->e11.values()[k];
      const double b = h->e12.values()[k];
      const double c = h->e22.values()[k];
      s += a * a + 2.0 * b * b + c * c;
    }
    m = std::max(m, s);
  }
  return std::sqrt(m);
}

}  // namespace

double c1_norm(const VectorField2& f) { return std::max(sup_norm(f), jacobian_sup(f, Mat2{})); }

double c1_norm(const AffineVectorField& f) { return std::max(sup_norm(f), jacobian_sup(f.periodic, f.M)); }

double hessian_sup(const VectorField2& f) { return hessian_sup_periodic(f); }

double hessian_sup(const AffineVectorField& f) { return hessian_sup_periodic(f.periodic); }

double c2_norm(const VectorField2& f) { return std::max(c1_norm(f), hessian_sup(f)); }

double c2_norm(const AffineVectorField& f) { return std::max(c1_norm(f), hessian_sup(f)); }

double l1_norm(const ScalarField& f) {
  double s = 0.0;
  for (double x : f.values()) s += std::abs(x);
  const double h = f.grid().spacing();
  return s * h * h;
}

double l1_norm(const SymMatField2& f) {
  const auto& a = f.e11.values();
  const auto& b = f.e12.values();
  const auto& c = f.e22.values();
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::sqrt(a[k] * a[k] + 2.0 * b[k] * b[k] + c[k] * c[k]);
  const double h = f.grid().spacing();
  return s * h * h;
}

double holder_seminorm(const std::vector<const ScalarField*>& components, double alpha, int levels) {
  if (components.empty()) return 0.0;
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("Hoelder exponent must lie in (0, 1]");
  const Grid2& g = components.front()->grid();
  const int n = g.n();
  const double h = g.spacing();
  static const int kDirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  double best = 0.0;
  for (int q = 0, step = 1; step <= n / 2 && (levels < 0 || q < levels); ++q, step *= 2) {
    for (const auto& dir : kDirs) {
      const int di = dir[0] * step;
      const int dj = dir[1] * step;
      const double dist = h * step * std::sqrt(static_cast<double>(dir[0] * dir[0] + dir[1] * dir[1]));
      const double denom = std::pow(dist, alpha);
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        const int i2 = (i + di + n) % n;
        for (int j = 0; j < n; ++j) {
          const int j2 = (j + dj + n) % n;
          double s = 0.0;
          for (const ScalarField* f : components) {
            const double d = (*f)(i2, j2) - (*f)(i, j);
            s += d * d;
          }
          worst = std::max(worst, s);
        }
      }
      best = std::max(best, std::sqrt(worst) / denom);
    }
  }
  return best;
}

double holder_seminorm(const ScalarField& f, double alpha, int levels) {
  return holder_seminorm(std::vector<const ScalarField*>{&f}, alpha, levels);
}

}  // namespace macorr
